//! Full enumeration of small Weyl groups and their (twisted) conjugacy classes.

use std::collections::HashMap;

use super::{TwistedWeylElt, WeylElt};
use crate::rootdata::RootDatum;

/// All elements of `W`, in breadth-first order by length.
pub fn enumerate(rd: &RootDatum) -> Vec<WeylElt> {
    let n = rd.rank();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let id = WeylElt::identity(n);
    seen.insert(id.m.clone(), ());
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let x = out[k].clone();
        for i in 0..n {
            if x.has_right_descent(i) {
                continue;
            }
            let y = x.mul_simple(rd, i);
            if seen.insert(y.m.clone(), ()).is_none() {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Minimal length representative; ties broken by the lexicographically
    /// smallest reduced word.
    pub rep: TwistedWeylElt,
    pub size: usize,
    /// Indices into the element list passed to [`conjugacy_classes`].
    pub members: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Classes of `W delta^j` under `W`-conjugation, in order of increasing
/// representative length.
pub fn conjugacy_classes(rd: &RootDatum, elements: &[WeylElt], j: usize) -> Vec<ConjugacyClass> {
    let n = rd.rank();
    let index: HashMap<&[i64], usize> = elements.iter().enumerate().map(|(k, w)| (w.m.as_slice(), k)).collect();
    let mut parent: Vec<usize> = (0..elements.len()).collect();
    for (k, w) in elements.iter().enumerate() {
        for i in 0..n {
            // s_i (w delta^j) s_i = s_i w s_{delta^j(i)} delta^j
            let y = w.simple_mul(rd, i).mul_simple(rd, rd.delta_index(i, j));
            let l = index[y.m.as_slice()];
            let (a, b) = (find(&mut parent, k), find(&mut parent, l));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for k in 0..elements.len() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }
    let mut classes: Vec<(usize, Vec<usize>, ConjugacyClass)> = groups
        .into_values()
        .map(|members| {
            let best = members
                .iter()
                .map(|&k| {
                    let w = &elements[k];
                    (w.length(rd), w.reduced_word(rd).to_vec(), k)
                })
                .min()
                .unwrap();
            let rep = TwistedWeylElt::new(rd, elements[best.2].clone(), j);
            (best.0, best.1, ConjugacyClass { rep, size: members.len(), members })
        })
        .collect();
    classes.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    classes.into_iter().map(|c| c.2).collect()
}

/// Whether `x` and `y` are conjugate under `W`, by a breadth-first search of
/// the conjugacy orbit of `x` under simple reflections.
pub fn are_conjugate(rd: &RootDatum, x: &TwistedWeylElt, y: &TwistedWeylElt) -> bool {
    if x.j != y.j {
        return false;
    }
    let n = rd.rank();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    seen.insert(x.w.m.clone(), ());
    let mut queue = vec![x.w.clone()];
    let mut k = 0;
    while k < queue.len() {
        let w = queue[k].clone();
        if w == y.w {
            return true;
        }
        for i in 0..n {
            let z = w.simple_mul(rd, i).mul_simple(rd, rd.delta_index(i, x.j));
            if seen.insert(z.m.clone(), ()).is_none() {
                queue.push(z);
            }
        }
        k += 1;
    }
    false
}

/// The `W`-conjugacy class of `x`, in breadth-first order from `x`.
pub fn conjugacy_orbit(rd: &RootDatum, x: &TwistedWeylElt) -> Vec<TwistedWeylElt> {
    let n = rd.rank();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    seen.insert(x.w.m.clone(), ());
    let mut out = vec![x.clone()];
    let mut k = 0;
    while k < out.len() {
        let w = out[k].w.clone();
        for i in 0..n {
            let z = w.simple_mul(rd, i).mul_simple(rd, rd.delta_index(i, x.j));
            if seen.insert(z.m.clone(), ()).is_none() {
                out.push(TwistedWeylElt { w: z, j: x.j });
            }
        }
        k += 1;
    }
    out
}
