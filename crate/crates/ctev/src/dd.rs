//! Double-double arithmetic: an unevaluated sum of two `f64`s giving ~31
//! significant digits.
//!
//! The power series for the cylinder functions J and Y cancel by a factor of
//! up to `exp(|Re z| + 2 Im z)` when the Hankel combination `J + iY` is formed
//! in the upper half plane. Carrying the series in double-double precision
//! absorbs that loss entirely for `|z|` below the asymptotic switchover.
//! Only the handful of operations the series need are implemented.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const DD_PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub(crate) const DD_EULER: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };
pub(crate) const DD_LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * x);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        self.div(Dd::from_f64(x))
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        // One Newton step on top of the f64 square root reaches full width.
        let y0 = Dd::from_f64(self.hi.sqrt());
        let corr = self.sub(y0.mul(y0)).div(y0.mul_f64(2.0));
        y0.add(corr)
    }

    /// Natural logarithm for positive arguments via `ln(m 2^e) = e ln 2 + ln m`
    /// with `ln m = 2 atanh((m-1)/(m+1))` on m in [0.71, 1.42).
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut e = self.hi.log2().floor() as i32;
        let mut m = self.mul_f64((2.0f64).powi(-e));
        if m.hi > std::f64::consts::SQRT_2 {
            m = m.mul_f64(0.5);
            e += 1;
        }
        let t = m.sub(Dd::ONE).div(m.add(Dd::ONE));
        let t2 = t.mul(t);
        let mut term = t;
        let mut sum = t;
        for j in 1..=24 {
            term = term.mul(t2);
            sum = sum.add(term.div_f64((2 * j + 1) as f64));
        }
        sum.mul_f64(2.0).add(DD_LN2.mul_f64(e as f64))
    }

    /// arctan via two angle halvings and a Taylor tail; |reduced| <= tan(pi/16).
    fn atan(self) -> Dd {
        let neg = self.hi < 0.0;
        let mut a = if neg { self.neg() } else { self };
        let mut flip = false;
        if a.hi > 1.0 {
            a = Dd::ONE.div(a);
            flip = true;
        }
        let mut halvings = 0;
        for _ in 0..2 {
            let s = Dd::ONE.add(a.mul(a)).sqrt();
            a = a.div(Dd::ONE.add(s));
            halvings += 1;
        }
        let a2 = a.mul(a);
        let mut term = a;
        let mut sum = a;
        let mut sign = -1.0;
        for j in 1..=26 {
            term = term.mul(a2);
            sum = sum.add(term.mul_f64(sign / (2 * j + 1) as f64));
            sign = -sign;
        }
        let mut r = sum.mul_f64((1 << halvings) as f64);
        if flip {
            r = DD_PI.mul_f64(0.5).sub(r);
        }
        if neg {
            r = r.neg();
        }
        r
    }

    /// Principal argument of x + iy, full width only for x > 0; the series
    /// path never needs the left half plane at severe cancellation.
    pub fn atan2(y: f64, x: f64) -> Dd {
        if x > 0.0 {
            Dd::from_f64(y).div(Dd::from_f64(x)).atan()
        } else {
            Dd::from_f64(y.atan2(x))
        }
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct DdC {
    pub re: Dd,
    pub im: Dd,
}

impl DdC {
    pub const ZERO: DdC = DdC { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdC = DdC { re: Dd::ONE, im: Dd::ZERO };

    #[inline]
    pub fn from_c64(z: Complex64) -> DdC {
        DdC { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: DdC) -> DdC {
        DdC { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn sub(self, o: DdC) -> DdC {
        DdC { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub fn mul(self, o: DdC) -> DdC {
        DdC {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, s: Dd) -> DdC {
        DdC { re: self.re.mul(s), im: self.im.mul(s) }
    }

    #[inline]
    pub fn mul_f64(self, s: f64) -> DdC {
        DdC { re: self.re.mul_f64(s), im: self.im.mul_f64(s) }
    }

    #[inline]
    pub fn div_f64(self, s: f64) -> DdC {
        DdC { re: self.re.div_f64(s), im: self.im.div_f64(s) }
    }

    pub fn div(self, o: DdC) -> DdC {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(DdC { re: o.re, im: o.im.neg() });
        DdC { re: num.re.div(den), im: num.im.div(den) }
    }

    /// Multiply by i.
    #[inline]
    pub fn mul_i(self) -> DdC {
        DdC { re: self.im.neg(), im: self.re }
    }

    /// Squared modulus rounded to f64, for termination tests.
    #[inline]
    pub fn norm_sqr_f64(self) -> f64 {
        let r = self.re.to_f64();
        let i = self.im.to_f64();
        r * r + i * i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_mul_div_roundtrip() {
        let a = Dd::from_f64(1.0).div_f64(3.0);
        let b = a.mul_f64(3.0);
        assert!((b.to_f64() - 1.0).abs() < 1e-30);
        assert!(b.sub(Dd::ONE).hi.abs() < 1e-30);
    }

    #[test]
    fn dd_ln_matches_f64_and_refines() {
        for &x in &[0.3, 1.0, 2.0, 7.389056098930650, 123.456] {
            let l = Dd::from_f64(x).ln();
            assert!((l.to_f64() - x.ln()).abs() <= 4.0 * f64::EPSILON * x.ln().abs().max(1.0));
        }
        // ln 2 against the stored constant
        let l2 = Dd::from_f64(2.0).ln();
        assert!(l2.sub(DD_LN2).to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_atan2_quarter_turns() {
        let q = Dd::atan2(1.0, 1.0);
        assert!(q.sub(DD_PI.mul_f64(0.25)).to_f64().abs() < 1e-30);
        let t = Dd::atan2(2.0, 3.0);
        assert!((t.to_f64() - (2.0f64).atan2(3.0)).abs() < 1e-15);
    }

    #[test]
    fn dd_atan2_full_width() {
        // reference pair from a 60-digit computation
        let want = Dd { hi: 1.0471975511965979, lo: -8.099654229552622e-17 };
        let got = Dd::atan2(10.652112466548596, 6.15);
        let err = got.sub(want).to_f64().abs();
        assert!(err < 1e-28, "atan2 dd error {err:e}");
    }

    #[test]
    fn dd_ln_full_width() {
        let want = Dd { hi: 5.063741526126283, lo: -3.4295282127323453e-16 };
        let got = Dd::from_f64(158.18124979065547).ln();
        let err = got.sub(want).to_f64().abs();
        assert!(err < 1e-28, "ln dd error {err:e}");
    }

    #[test]
    fn dd_sqrt_newton() {
        let s = Dd::from_f64(2.0).sqrt();
        let back = s.mul(s).sub(Dd::from_f64(2.0));
        assert!(back.to_f64().abs() < 1e-30);
    }
}
