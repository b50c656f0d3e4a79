//! Deterministic polynomial identity testing.
//!
//! Two rational functions of total degree at most `degree_bound` that
//! agree at more than `degree_bound` distinct points are equal. The
//! sampler walks the fixed sequence 0, 1, -1, 2, -2, ... and skips
//! declared poles (an evaluation returning `None`), so the test is
//! deterministic and exact.

use crate::error::{Error, Result};
use crate::rat::{sample_sequence, Rat};

/// Evaluation hook: `None` marks a pole at the sample point.
pub type EvalFn<'a> = &'a dyn Fn(&Rat) -> Option<Rat>;

/// Returns true iff `f` and `g` agree at `sample_count` distinct
/// non-pole rational points. With `sample_count > degree_bound` this
/// certifies equality of rational functions of total degree at most
/// `degree_bound`.
pub fn poly_identity_check(
    f: EvalFn,
    g: EvalFn,
    degree_bound: usize,
    sample_count: usize,
) -> Result<bool> {
    if sample_count <= degree_bound {
        return Err(Error::InsufficientSamples(format!(
            "need more than {degree_bound} samples, got {sample_count}"
        )));
    }
    let max_attempts = sample_count * 10 + 50;
    let mut used = 0usize;
    let mut attempts = 0usize;
    for x in sample_sequence() {
        if used == sample_count {
            break;
        }
        if attempts == max_attempts {
            return if used == 0 {
                Err(Error::PoleEncountered)
            } else {
                Err(Error::InsufficientSamples(format!(
                    "only {used} of {sample_count} samples available"
                )))
            };
        }
        attempts += 1;
        let (Some(fv), Some(gv)) = (f(&x), g(&x)) else {
            continue;
        };
        if fv != gv {
            return Ok(false);
        }
        used += 1;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;
    use num_traits::Zero;

    #[test]
    fn expands_binomial() {
        let f = |a: &Rat| Some((a + rat_i(1)) * (a + rat_i(1)));
        let g = |a: &Rat| Some(a * a + rat_i(2) * a + rat_i(1));
        assert!(poly_identity_check(&f, &g, 2, 5).unwrap());
    }

    #[test]
    fn distinguishes_cube_from_square() {
        let f = |a: &Rat| Some(a * a * a);
        let g = |a: &Rat| Some(a * a);
        assert!(!poly_identity_check(&f, &g, 3, 5).unwrap());
    }

    #[test]
    fn skips_poles() {
        // 1/a vs a/a^2 with pole at 0
        let f = |a: &Rat| if a.is_zero() { None } else { Some(a.recip()) };
        let g = |a: &Rat| {
            if a.is_zero() {
                None
            } else {
                Some(a / (a * a))
            }
        };
        assert!(poly_identity_check(&f, &g, 2, 6).unwrap());
    }

    #[test]
    fn sample_count_precondition() {
        let f = |a: &Rat| Some(a.clone());
        assert!(matches!(
            poly_identity_check(&f, &f, 5, 5),
            Err(Error::InsufficientSamples(_))
        ));
    }

    #[test]
    fn everything_is_a_pole() {
        let f = |_: &Rat| None;
        let g = |a: &Rat| Some(a.clone());
        assert!(matches!(
            poly_identity_check(&f, &g, 2, 5),
            Err(Error::PoleEncountered)
        ));
    }
}
