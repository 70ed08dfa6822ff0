//! Exact EGF coefficient arithmetic over big integers.
//!
//! Sequences are finite prefixes. Each recurrence that integrates produces
//! one more term than it consumes: [`exp_integral`] maps `f₀..f_N` to
//! `g₀..g_{N+1}` and [`k_sigma_k_counts`] maps `f₀..f_N` to `h₀..h_{N+2}`.
//! Callers truncate as needed.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumeration::CountSeq;
use crate::error::{Error, Result};

/// Rows `0..rows` of Pascal's triangle.
fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
    let mut out: Vec<Vec<BigUint>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = vec![BigUint::one(); n + 1];
        for i in 1..n {
            row[i] = &out[n - 1][i - 1] + &out[n - 1][i];
        }
        out.push(row);
    }
    out
}

/// `Σ_{i=0}^{n} C(n,i)·a_i·b_{n−i}` using a precomputed Pascal row.
fn convolve_term(row: &[BigUint], a: &[BigUint], b: &[BigUint], n: usize) -> BigUint {
    (0..=n).fold(BigUint::zero(), |acc, i| acc + &row[i] * &a[i] * &b[n - i])
}

/// EGF product: `c_n = Σ C(n,i)·a_i·b_{n−i}`.
pub fn binomial_convolve(a: &CountSeq, b: &CountSeq) -> Result<CountSeq> {
    if a.len() != b.len() {
        return Err(Error::Contract(format!(
            "convolving sequences of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let rows = pascal(a.len());
    let terms = (0..a.len())
        .map(|n| convolve_term(&rows[n], a.terms(), b.terms(), n))
        .collect();
    Ok(CountSeq::new(terms))
}

/// Solves `g = 1 + ∫ g·f`, i.e. `g = exp(∫ f)`:
/// `g₀ = 1`, `g_{n+1} = Σ_{i=0}^{n} C(n,i)·g_i·f_{n−i}`.
///
/// With `f` the avoider counts of a contiguous pattern `σ`, `g` counts the
/// avoiders of `k-σ` where `k` exceeds every letter of `σ`.
pub fn exp_integral(f: &CountSeq) -> CountSeq {
    let rows = pascal(f.len());
    let mut g: Vec<BigUint> = Vec::with_capacity(f.len() + 1);
    g.push(BigUint::one());
    for (n, row) in rows.iter().enumerate() {
        let next = convolve_term(row, &g, f.terms(), n);
        g.push(next);
    }
    CountSeq::new(g)
}

/// `h = 1 + ∫ g²`: `h₀ = 1`, `h_{n+1} = Σ_{i=0}^{n} C(n,i)·g_i·g_{n−i}`.
pub fn one_plus_integral_of_square(g: &CountSeq) -> CountSeq {
    let rows = pascal(g.len());
    let mut h = Vec::with_capacity(g.len() + 1);
    h.push(BigUint::one());
    h.extend((0..g.len()).map(|n| convolve_term(&rows[n], g.terms(), g.terms(), n)));
    CountSeq::new(h)
}

/// Avoider counts of `k-σ-k` from those of `σ`: `h = 1 + ∫ exp(∫ f)²`.
pub fn k_sigma_k_counts(f: &CountSeq) -> CountSeq {
    one_plus_integral_of_square(&exp_integral(f))
}

/// Bicolored set partitions of `[n]` for `0 <= n <= max_n`, EGF `exp(2(eˣ−1))`.
pub fn bicolored_bell(max_n: usize) -> CountSeq {
    exp_integral(&CountSeq::constant(2, max_n))
}

/// Set partitions of `[n]` for `0 <= n <= max_n`, EGF `exp(eˣ−1)`.
pub fn bell(max_n: usize) -> CountSeq {
    exp_integral(&CountSeq::constant(1, max_n))
}
