//! Shared data and checks for the property and acceptance suites.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_lift::classes::{lift_order, LiftMethod, LiftOptions};
use weyl_lift::rational::frac;
use weyl_lift::torusnorm::{delta_conjugate, multiply, power, sigma};
use weyl_lift::weyl::enumerate;
use weyl_lift::{NormalizerElt, RootDatum, TwistedWeylElt, WeylElt};

/// Twelve data covering every family, isogenies and diagram automorphisms.
pub fn data() -> Vec<RootDatum> {
    [
        ("A2", "sc", "none"),
        ("A3", "SL/2", "flip"),
        ("A4", "adjoint", "flip"),
        ("B2", "sc", "none"),
        ("B3", "adjoint", "none"),
        ("C3", "sc", "none"),
        ("D4", "sc", "triality"),
        ("D5", "SO", "flip"),
        ("G2", "sc", "none"),
        ("F4", "sc", "none"),
        ("E6", "sc", "flip"),
        ("A1xB2", "sc", "none"),
    ]
    .iter()
    .map(|(t, i, d)| RootDatum::named(t, i, d).unwrap())
    .collect()
}

pub fn random_weyl(rd: &RootDatum, rng: &mut ChaCha8Rng) -> WeylElt {
    let len = rng.gen_range(0..3 * rd.rank() + 4);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rd.rank())).collect();
    WeylElt::from_word(rd, &word).unwrap()
}

pub fn random_twisted(rd: &RootDatum, rng: &mut ChaCha8Rng) -> TwistedWeylElt {
    let j = rng.gen_range(0..rd.delta_order());
    TwistedWeylElt::new(rd, random_weyl(rd, rng), j)
}

pub fn random_elt(rd: &RootDatum, rng: &mut ChaCha8Rng) -> NormalizerElt {
    let k = rng.gen_range(1..7);
    let mu: Vec<_> = (0..rd.rank()).map(|_| frac(rng.gen_range(0..k), k)).collect();
    NormalizerElt::new(rd, rd.torus_from_cochar(&mu), &random_twisted(rd, rng))
}

pub fn small_data() -> Vec<RootDatum> {
    [
        ("A1", "sc", "none"),
        ("A2", "sc", "flip"),
        ("A3", "sc", "flip"),
        ("A3", "adjoint", "flip"),
        ("B2", "sc", "none"),
        ("B3", "sc", "none"),
        ("B3", "adjoint", "none"),
        ("C3", "sc", "none"),
        ("C3", "adjoint", "none"),
        ("G2", "sc", "none"),
        ("A1xA2", "sc", "none"),
    ]
    .iter()
    .map(|(t, i, d)| RootDatum::named(t, i, d).unwrap())
    .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(xy)z = x(yz)` for one random triple in each datum.
pub fn associativity(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    for rd in data() {
        let (x, y, z) = (random_elt(&rd, &mut rng), random_elt(&rd, &mut rng), random_elt(&rd, &mut rng));
        if multiply(&rd, &multiply(&rd, &x, &y), &z) != multiply(&rd, &x, &multiply(&rd, &y, &z)) {
            return Err(format!("{}: {} {} {}", rd.group_name(), x.to_string(&rd), y.to_string(&rd), z.to_string(&rd)));
        }
    }
    Ok(())
}

/// `sigma(u) sigma(v) = sigma(uv)` whenever lengths add, over all of `W delta`.
/// Returns the number of pairs checked.
pub fn sigma_multiplicative() -> Result<usize, String> {
    let mut pairs = 0;
    for rd in small_data() {
        let all: Vec<TwistedWeylElt> = enumerate(&rd)
            .into_iter()
            .flat_map(|w| (0..rd.delta_order()).map(move |j| (w.clone(), j)))
            .map(|(w, j)| TwistedWeylElt::new(&rd, w, j))
            .collect();
        for u in &all {
            for v in &all {
                let uv = u.mul(&rd, v);
                if uv.length(&rd) == u.length(&rd) + v.length(&rd) {
                    pairs += 1;
                    if multiply(&rd, &sigma(&rd, u), &sigma(&rd, v)) != sigma(&rd, &uv) {
                        return Err(format!("{}: {} {}", rd.group_name(), u.to_string(&rd), v.to_string(&rd)));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

/// `delta^k sigma(w) delta^{-k} = sigma(delta^k w delta^{-k})`.
pub fn delta_equivariance() -> Result<usize, String> {
    let mut count = 0;
    for (t, d) in [("A3", "flip"), ("A4", "flip"), ("D4", "triality"), ("D4", "flip"), ("E6", "flip")] {
        let rd = RootDatum::named(t, "sc", d).unwrap();
        let elements = if t == "E6" {
            let mut r = rng(11);
            (0..300).map(|_| random_weyl(&rd, &mut r)).collect()
        } else {
            enumerate(&rd)
        };
        for w in elements {
            for k in 1..rd.delta_order() {
                count += 1;
                let x = TwistedWeylElt::from(w.clone());
                let moved = TwistedWeylElt::from(w.delta_conj(&rd, k));
                if delta_conjugate(&rd, &sigma(&rd, &x), k) != sigma(&rd, &moved) {
                    return Err(format!("{t}: {}", x.to_string(&rd)));
                }
            }
        }
    }
    Ok(count)
}

/// For odd `d = o(w)`, `sigma(w)^d` has order at most 2, so `sigma(w)^{d+1}`
/// is a lift of order `d`.
pub fn odd_order_construction() -> Result<usize, String> {
    let mut count = 0;
    for rd in small_data() {
        for w in enumerate(&rd) {
            for j in 0..rd.delta_order() {
                let x = TwistedWeylElt::new(&rd, w.clone(), j);
                let d = x.order(&rd);
                if d.is_multiple_of(2) {
                    continue;
                }
                count += 1;
                let fail = || format!("{} {}", rd.group_name(), x.to_string(&rd));
                let g = sigma(&rd, &x);
                let t = power(&rd, &g, d);
                let h = power(&rd, &g, d + 1);
                if !power(&rd, &t, 2).is_identity() || h.projection() != x || !power(&rd, &h, d).is_identity() {
                    return Err(fail());
                }
                let r = lift_order(&rd, &x, LiftOptions::default()).map_err(|e| e.to_string())?;
                let method_ok = matches!(r.method, LiftMethod::OddOrder | LiftMethod::EllipticTits);
                if r.lift_order != d || r.minimum != d || !r.exact || !method_ok {
                    return Err(fail());
                }
            }
        }
    }
    Ok(count)
}
