#![allow(dead_code)]

use dlcalc::{DlOp, DlSequence};
use rand::Rng;

/// Allowability read straight off the definition, on raw `(ε, 2i)` pairs
/// listed innermost first. `k = None` is k = ∞.
pub fn allowable_by_definition(p: u32, ops: &[(bool, u32)], t: i64, k: Option<u32>) -> bool {
    let p = p as i64;
    let mut degree = t;
    for (m, &(eps, i2)) in ops.iter().enumerate() {
        if i2 == 0 {
            return false;
        }
        // integer index exactly on even classes
        if (i2 % 2 == 0) != (degree % 2 == 0) {
            return false;
        }
        if let Some(&(_, outer)) = ops.get(m + 1) {
            if outer > i2 {
                return false;
            }
            if eps && (i2 - outer) % 2 == 0 {
                return false;
            }
        }
        if let Some(k) = k {
            if i2 + 1 > k {
                return false;
            }
        }
        degree = p * degree + i2 as i64 * (p - 1) - eps as i64;
    }
    true
}

pub fn raw_degree(p: u32, ops: &[(bool, u32)], t: i64) -> i64 {
    ops.iter()
        .fold(t, |d, &(eps, i2)| p as i64 * d + i2 as i64 * (p as i64 - 1) - eps as i64)
}

pub fn to_sequence(ops: &[(bool, u32)]) -> DlSequence {
    DlSequence::from_innermost(
        ops.iter()
            .map(|&(bockstein, twice_index)| DlOp::P {
                bockstein,
                twice_index,
            })
            .collect(),
    )
}

/// All raw odd-primary sequences of weight ≤ `w`, filtered by the definition
/// and by excess `≤ e`. Excess never drops and each operation leaves it at
/// least `2i(p−1) − 1`, so larger indices cannot occur.
pub fn brute_force_allowable(p: u32, k: Option<u32>, t: i64, w: u64, e: i64) -> Vec<DlSequence> {
    let max_i2 = (e as u32 + 1) / (p - 1);
    let letters: Vec<(bool, u32)> = (1..=max_i2)
        .flat_map(|i2| [(false, i2), (true, i2)])
        .collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<(bool, u32)>> = vec![Vec::new()];
    let mut weight = 1u64;
    loop {
        for ops in &layer {
            let excess = raw_degree(p, ops, t) - weight as i64 * t;
            if excess <= e && allowable_by_definition(p, ops, t, k) {
                out.push(to_sequence(ops));
            }
        }
        weight *= p as u64;
        if weight > w {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|ops| {
                letters.iter().map(move |&l| {
                    let mut next = ops.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out
}

fn random_op<R: Rng>(rng: &mut R, p: u32) -> String {
    if p == 2 {
        format!("Q_{}", rng.gen_range(1..6))
    } else {
        let b = if rng.gen_bool(0.5) { "b" } else { "" };
        let i2 = rng.gen_range(1..9u32);
        if i2 % 2 == 0 {
            format!("{b}P_{}", i2 / 2)
        } else {
            format!("{b}P_{i2}/2")
        }
    }
}

/// A random expression in canonical rendering.
pub fn random_expr_text<R: Rng>(rng: &mut R, p: u32) -> String {
    let vars = ["x", "y", "v", "x1", "w_2"];
    let n_terms = rng.gen_range(1..4);
    let mut out = String::new();
    for n in 0..n_terms {
        let negative = rng.gen_bool(0.3);
        match (n, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let n_factors = rng.gen_range(0..4);
        let coeff = rng.gen_range(1..12u32);
        if n_factors == 0 {
            out.push_str(&coeff.to_string());
            continue;
        }
        if coeff != 1 {
            out.push_str(&format!("{coeff}*"));
        }
        for f in 0..n_factors {
            if f > 0 {
                out.push_str(" * ");
            }
            for _ in 0..rng.gen_range(0..4) {
                out.push_str(&random_op(rng, p));
                out.push(' ');
            }
            out.push_str(vars[rng.gen_range(0..vars.len())]);
            let degree = rng.gen_range(-1..5i32);
            if degree != 0 {
                out.push_str(&format!("({degree})"));
            }
            let exp = rng.gen_range(0..4u32);
            if exp != 1 {
                out.push_str(&format!("^{exp}"));
            }
        }
    }
    out
}
