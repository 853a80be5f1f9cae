//! Seeded random classical polynomials.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::series::GeneralizedDirichletSeries;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the closed unit disc.
pub fn unit_disc<R: Rng>(rng: &mut R) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, 2.0 * PI * rng.gen::<f64>())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// All coefficients random, then scaled by a factor in `[0.5, 2]`.
    Generic,
    /// `a₀ = 1`, the rest random and scaled by a factor in `[0.2, 2]`.
    Normalized,
    /// As `Normalized`, with `|aₙ| ≤ 1` enforced by clipping.
    Bounded,
    /// `a₀ = 1` and `‖L − 1‖₂ = 1`.
    UnitTail,
}

/// Coefficients of a classical polynomial with `1..=max_terms` terms.
/// The first `n_terms` override (if any) fixes the length.
pub fn coefficients<R: Rng>(rng: &mut R, family: Family, max_terms: usize, n_terms: Option<usize>) -> Vec<Complex64> {
    let n = n_terms.unwrap_or_else(|| rng.gen_range(1..=max_terms.max(1)));
    let mut a: Vec<Complex64> = (0..n).map(|_| unit_disc(rng)).collect();
    match family {
        Family::Generic => {
            let s = rng.gen_range(0.5..=2.0);
            a.iter_mut().for_each(|x| *x *= s);
            if a[0].norm() == 0.0 {
                a[0] = Complex64::new(1.0, 0.0);
            }
        }
        Family::Normalized | Family::Bounded => {
            let s = rng.gen_range(0.2..=2.0);
            a.iter_mut().for_each(|x| *x *= s);
            a[0] = Complex64::new(1.0, 0.0);
            if family == Family::Bounded {
                for x in a.iter_mut() {
                    let r = x.norm();
                    if r > 1.0 {
                        *x /= r;
                    }
                }
            }
        }
        Family::UnitTail => {
            a[0] = Complex64::new(1.0, 0.0);
            let tail: f64 = a[1..].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if tail > 0.0 {
                a[1..].iter_mut().for_each(|x| *x /= tail);
            }
        }
    }
    a
}

pub fn classical_series<R: Rng>(
    rng: &mut R,
    family: Family,
    max_terms: usize,
    n_terms: Option<usize>,
) -> Result<GeneralizedDirichletSeries> {
    let a = coefficients(rng, family, max_terms, n_terms);
    GeneralizedDirichletSeries::new(crate::series::ExponentSequence::Classical, a, 0.5)
}

/// `count` series; the first is a single term (edge case), the second has
/// the full `max_terms`.
pub fn population(
    seed: u64,
    family: Family,
    count: usize,
    max_terms: usize,
) -> Result<Vec<GeneralizedDirichletSeries>> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = match i {
                0 if family != Family::UnitTail => Some(1),
                0 | 1 => Some(max_terms.max(2)),
                _ => None,
            };
            let n = if family == Family::UnitTail { n.or_else(|| Some(r.gen_range(2..=max_terms.max(2)))) } else { n };
            classical_series(&mut r, family, max_terms, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_well_formed() {
        let a = population(42, Family::Bounded, 20, 20).unwrap();
        let b = population(42, Family::Bounded, 20, 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].coefficients().len(), 1);
        for s in &a {
            assert!(s.coefficients().iter().all(|x| x.norm() <= 1.0 + 1e-15));
            assert_eq!(s.coefficients()[0], Complex64::new(1.0, 0.0));
        }
        for s in population(7, Family::UnitTail, 10, 20).unwrap() {
            let t: f64 = s.coefficients()[1..].iter().map(|x| x.norm_sqr()).sum();
            assert!((t - 1.0).abs() < 1e-12);
        }
    }
}
