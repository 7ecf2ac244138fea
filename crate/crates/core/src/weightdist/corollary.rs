//! Closed forms for `C_3 … C_10` of `H(m, q)`.
//!
//! Each is `(q^m - 1) · Σ coeff · q^a · (q^m)^b / h!`. The coefficient data is
//! the published table entered term by term, so an inexact division by `h!` or a
//! mismatch against the recursion points at a transcription error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};

/// `coeff · q^q_exp · (q^m)^qm_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorollaryTerm {
    pub coeff: i64,
    pub q_exp: u32,
    pub qm_exp: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct CorollaryPolynomial {
    pub h: u32,
    pub terms: &'static [CorollaryTerm],
}

const fn t(coeff: i64, q_exp: u32, qm_exp: u32) -> CorollaryTerm {
    CorollaryTerm { coeff, q_exp, qm_exp }
}

// Terms in the printed order. q^(a(b+m)) is entered as q_exp = a*b, qm_exp = a.
const C3: &[CorollaryTerm] = &[t(-1, 1, 0), t(1, 0, 1)];

const C4: &[CorollaryTerm] = &[t(-6, 1, 0), t(5, 2, 0), t(6, 0, 1), t(1, 0, 2), t(-6, 1, 1)];

const C5: &[CorollaryTerm] = &[
    t(-36, 1, 0), t(54, 2, 0), t(-26, 3, 0), t(36, 0, 1), t(6, 0, 2),
    t(1, 0, 3), t(-60, 1, 1), t(35, 2, 1), t(-10, 1, 2),
];

const C6: &[CorollaryTerm] = &[
    t(-240, 1, 0), t(500, 2, 0), t(-450, 3, 0), t(154, 4, 0),
    t(240, 0, 1), t(20, 0, 2), t(10, 0, 3), t(1, 0, 4), t(-520, 1, 1),
    t(85, 2, 2), t(550, 2, 1), t(-225, 3, 1), t(-110, 1, 2),
    t(-15, 1, 3),
];

const C7: &[CorollaryTerm] = &[
    t(-1800, 1, 0), t(4710, 2, 0), t(-6035, 3, 0), t(3940, 4, 0),
    t(-1044, 5, 0), t(1800, 0, 1), t(-90, 0, 2), t(85, 0, 3), t(15, 0, 4),
    t(1, 0, 5), t(-4620, 1, 1), t(1505, 2, 2), t(6755, 2, 1),
    t(-5215, 3, 1), t(1624, 4, 1), t(-805, 1, 2), t(-735, 3, 2),
    t(-245, 1, 3), t(175, 2, 3), t(-21, 1, 4),
];

const C8: &[CorollaryTerm] = &[
    t(-15120, 1, 0), t(47124, 2, 0), t(-77196, 3, 0), t(72779, 4, 0),
    t(-37240, 5, 0), t(8028, 6, 0), t(15120, 0, 1), t(-3276, 0, 2), t(840, 0, 3),
    t(175, 0, 4), t(21, 0, 5), t(1, 0, 6), t(-43848, 1, 1),
    t(17934, 2, 2), t(-1960, 3, 3), t(79632, 2, 1),
    t(6769, 4, 2), t(-87808, 3, 1), t(52661, 4, 1),
    t(-13132, 5, 1), t(-3276, 1, 2), t(-19236, 3, 2),
    t(-3080, 1, 3), t(4270, 2, 3), t(-476, 1, 4), t(322, 2, 4),
    t(-28, 1, 5),
];

const C9: &[CorollaryTerm] = &[
    t(-141120, 1, 0), t(507024, 2, 0), t(-1002736, 3, 0),
    t(1221444, 4, 0), t(-910644, 5, 0), t(382088, 6, 0), t(-69264, 7, 0),
    t(141120, 0, 1), t(-57456, 0, 2), t(10864, 0, 3), t(1960, 0, 4),
    t(322, 0, 5), t(28, 0, 6), t(1, 0, 7), t(-449568, 1, 1),
    t(165396, 2, 2), t(-67116, 3, 3), t(957936, 2, 1),
    t(246624, 4, 2), t(-1349404, 3, 1), t(1175874, 4, 1),
    t(-571116, 5, 1), t(118124, 6, 1), t(33936, 1, 2),
    t(-332584, 3, 2), t(-67284, 5, 2), t(-39396, 1, 3),
    t(74844, 2, 3), t(22449, 4, 3), t(-7812, 1, 4),
    t(10332, 2, 4), t(-4536, 3, 4), t(-840, 1, 5),
    t(546, 2, 5), t(-36, 1, 6),
];

const C10: &[CorollaryTerm] = &[
    t(-1451520, 1, 0), t(5880384, 2, 0), t(-13550832, 3, 0),
    t(20090832, 4, 0), t(-19485852, 5, 0), t(11984244, 6, 0),
    t(-4251240, 7, 0), t(663696, 8, 0), t(1451520, 0, 1), t(-893376, 0, 2),
    t(174384, 0, 3), t(21504, 0, 4), t(4536, 0, 5), t(546, 0, 6),
    t(36, 0, 7), t(1, 0, 8), t(-4987008, 1, 1), t(857520, 2, 2),
    t(-1569540, 3, 3), t(63273, 4, 4), t(12035088, 2, 1),
    t(5797770, 4, 2), t(-20393616, 3, 1), t(723680, 6, 2),
    t(23050848, 4, 1), t(-16423398, 5, 1), t(6661236, 6, 1),
    t(-1172700, 7, 1), t(1341360, 1, 2), t(-4686480, 3, 2),
    t(-3264780, 5, 2), t(-576240, 1, 3), t(1233960, 2, 3),
    t(1030260, 4, 3), t(-269325, 5, 3), t(-117012, 1, 4),
    t(227808, 2, 4), t(-196392, 3, 4), t(-17430, 1, 5),
    t(22260, 2, 5), t(-9450, 3, 5), t(-1380, 1, 6),
    t(870, 2, 6), t(-45, 1, 7),
];

pub const COROLLARY_POLYNOMIALS: [CorollaryPolynomial; 8] = [
    CorollaryPolynomial { h: 3, terms: C3 },
    CorollaryPolynomial { h: 4, terms: C4 },
    CorollaryPolynomial { h: 5, terms: C5 },
    CorollaryPolynomial { h: 6, terms: C6 },
    CorollaryPolynomial { h: 7, terms: C7 },
    CorollaryPolynomial { h: 8, terms: C8 },
    CorollaryPolynomial { h: 9, terms: C9 },
    CorollaryPolynomial { h: 10, terms: C10 },
];

impl CorollaryPolynomial {
    pub fn get(h: u32) -> Option<&'static CorollaryPolynomial> {
        COROLLARY_POLYNOMIALS.iter().find(|p| p.h == h)
    }

    /// `(q^m - 1) Σ terms`, before the division by `h!`.
    pub fn numerator(&self, q: u64, m: u32) -> BigInt {
        let q = BigInt::from(q);
        let qm = Pow::pow(&q, m);
        let sum: BigInt = self
            .terms
            .iter()
            .map(|t| BigInt::from(t.coeff) * Pow::pow(&q, t.q_exp) * Pow::pow(&qm, t.qm_exp))
            .sum();
        (qm - 1) * sum
    }

    pub fn evaluate(&self, q: u64, m: u32) -> Result<BigInt> {
        let fact: BigInt = (1..=self.h).map(BigInt::from).product();
        let (quot, rem) = self.numerator(q, m).div_rem(&fact);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("closed form for C_{} at q = {q}, m = {m} is not divisible by {}!", self.h, self.h),
            });
        }
        Ok(quot)
    }
}

/// `C_h` of `H(m, q)` from the closed form, `3 <= h <= 10`.
pub fn corollary_poly(h: u32, q: u64, m: u32) -> Result<BigInt> {
    CorollaryPolynomial::get(h)
        .ok_or_else(|| Error::InvalidParameter(format!("closed forms exist for 3 <= h <= 10, got {h}")))?
        .evaluate(q, m)
}
