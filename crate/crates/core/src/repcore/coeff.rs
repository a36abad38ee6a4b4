use crate::{Error, Result};

/// `(E_j, O_j)`: `E_j = 1` iff `j` is even, `O_j = 1` iff `j` is odd.
pub fn parity_indicators(j: i64) -> (u8, u8) {
    if j.rem_euclid(2) == 0 {
        (1, 0)
    } else {
        (0, 1)
    }
}

fn even(j: i64) -> f64 {
    parity_indicators(j).0 as f64
}

fn odd(j: i64) -> f64 {
    parity_indicators(j).1 as f64
}

fn checked_sqrt(coefficient: &'static str, p: u32, mu12: i64, mu22: i64, radicand: f64) -> Result<f64> {
    // rounding in the quotient can leave a radicand a few ulps below zero
    if radicand < -1e-12 || !radicand.is_finite() {
        return Err(Error::Domain { coefficient, p, mu12, mu22, radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// `G1(mu12, mu22) = sqrt(mu12 (mu12+mu22+1)(p-mu12) / (mu12+mu22+1-O_{mu22+1}))`.
///
/// On the ground row `mu22 = 0` the quotient is evaluated in its cancelled
/// form `(mu12+1)(p-mu12)`, which removes the `0/0` at `mu12 = 0`.
pub fn coeff_g1(p: u32, mu12: i64, mu22: i64) -> Result<f64> {
    let pf = p as f64;
    let a = mu12 as f64;
    let radicand = if mu22 == 0 {
        (a + 1.0) * (pf - a)
    } else {
        let b = mu22 as f64;
        let denom = a + b + 1.0 - odd(mu22 + 1);
        if denom == 0.0 {
            return Err(Error::Domain { coefficient: "G1", p, mu12, mu22, radicand: f64::NAN });
        }
        a * (a + b + 1.0) * (pf - a) / denom
    };
    checked_sqrt("G1", p, mu12, mu22, radicand)
}

/// `G2(mu12, mu22)` built from the parity indicators of `mu22` and `mu22+1`.
pub fn coeff_g2(p: u32, mu12: i64, mu22: i64) -> Result<f64> {
    let pf = p as f64;
    let a = mu12 as f64;
    let b = mu22 as f64;
    let num = (odd(mu22) * b + 1.0)
        * (even(mu22 + 1) * (pf + b) + 1.0)
        * (odd(mu22 + 1) * (a + b) + 1.0);
    let denom = even(mu22 + 1) * (a + b - 1.0) + 1.0;
    if denom == 0.0 {
        return Err(Error::Domain { coefficient: "G2", p, mu12, mu22, radicand: f64::NAN });
    }
    checked_sqrt("G2", p, mu12, mu22, num / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        assert_eq!(parity_indicators(0), (1, 0));
        assert_eq!(parity_indicators(1), (0, 1));
        assert_eq!(parity_indicators(7), (0, 1));
        assert_eq!(parity_indicators(-1), (0, 1));
        assert_eq!(parity_indicators(-2), (1, 0));
    }

    #[test]
    fn g1_examples() {
        for p in 1..=6 {
            for mu22 in 0..5 {
                assert_eq!(coeff_g1(p, p as i64, mu22).unwrap(), 0.0);
            }
        }
        assert_eq!(coeff_g1(4, 0, 0).unwrap(), 2.0);
        assert!((coeff_g1(2, 1, 1).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn g2_examples() {
        for p in 1..=6 {
            assert_eq!(coeff_g2(p, 0, 0).unwrap(), 1.0);
        }
        assert!((coeff_g2(1, 1, 0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn g1_negative_radicand_is_a_domain_error() {
        assert!(matches!(coeff_g1(2, 3, 1), Err(Error::Domain { coefficient: "G1", .. })));
        assert!(matches!(coeff_g1(2, 3, 0), Err(Error::Domain { .. })));
    }

    #[test]
    fn nonnegative_on_admissible_arguments() {
        for p in 1..=6u32 {
            for mu22 in 0..=12i64 {
                let lo = if mu22 == 0 { 0 } else { 1 };
                for mu12 in lo..=p as i64 {
                    assert!(coeff_g1(p, mu12, mu22).unwrap() >= 0.0);
                    assert!(coeff_g2(p, mu12, mu22).unwrap() >= 0.0);
                }
            }
        }
    }
}
