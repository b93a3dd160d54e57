//! Cylindrical Bessel and Hankel functions of integer order for complex
//! arguments.
//!
//! Evaluation is split by region, for arguments reduced to the upper half
//! plane (the public dispatch in `mod.rs` maps Im z < 0 through conjugation):
//!
//! * `|z| < 12.5` — power series for J0, J1 and the log series for Y0, Y1,
//!   accumulated in double-double precision. The worst cancellation inside
//!   this disk is `exp(|Re z| + 2 Im z) <= exp(37.5) ~ 2e16`, which
//!   double-double absorbs with ~15 digits to spare.
//! * `|z| >= 12.5` — Hankel's large-argument expansions for H(1) and H(2)
//!   of order 0 and 1, truncated at the smallest term (~2e-12 worst case at
//!   the switchover, improving rapidly with |z|).
//! * higher orders — downward recurrence for J (minimal solution), upward
//!   recurrence for H (dominant solution), anchored to the base values.

use num_complex::Complex64;

use crate::dd::{Dd, DdC, DD_EULER, DD_PI};

/// Switchover modulus between the series and asymptotic regimes.
pub(crate) const ASYM_SWITCH: f64 = 12.5;

/// Order-0/1 values at one argument in the closed upper half plane.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BaseValues {
    pub j0: Complex64,
    pub j1: Complex64,
    pub y0: Complex64,
    pub y1: Complex64,
    pub h0: Complex64,
    pub h1: Complex64,
}

/// Base values for Im z >= 0, z != 0.
pub(crate) fn base_upper(z: Complex64) -> BaseValues {
    debug_assert!(z.im >= 0.0 && z.norm() > 0.0);
    if z.norm() >= ASYM_SWITCH {
        base_asymptotic(z)
    } else {
        base_series(z)
    }
}

/// J0, J1, Y0, Y1 power/log series in double-double, H = J + iY.
fn base_series(z: Complex64) -> BaseValues {
    let zd = DdC::from_c64(z);
    // w = z^2/4, the common series variable
    let w = zd.mul(zd).mul_f64(0.25);

    // J0 = sum (-w)^m / (m!)^2,  J1 = (z/2) sum (-w)^m / (m!(m+1)!)
    // Y-series carry the harmonic numbers H_m alongside.
    let mut t0 = DdC::ONE; // (-w)^m / (m!)^2
    let mut t1 = DdC::ONE; // (-w)^m / (m!(m+1)!)
    let mut j0 = DdC::ONE;
    let mut j1s = DdC::ONE;
    let mut s0 = DdC::ZERO; // sum H_m (-1)^(m+1) w^m/(m!)^2 = -sum H_m t0
    let mut s1 = DdC::ZERO; // sum (H_m + H_{m+1}) (-w)^m/(m!(m+1)!)
    let mut harmonic = Dd::ZERO;
    let mut max_t = 1.0f64;
    for m in 1..=220u32 {
        let mf = m as f64;
        t0 = t0.mul(w).div_f64(-mf * mf);
        t1 = t1.mul(w).div_f64(-mf * (mf + 1.0));
        harmonic = harmonic.add(Dd::ONE.div_f64(mf));
        j0 = j0.add(t0);
        j1s = j1s.add(t1);
        s0 = s0.sub(t0.mul_dd(harmonic));
        let h_next = harmonic.add(Dd::ONE.div_f64(mf + 1.0));
        s1 = s1.add(t1.mul_dd(harmonic.add(h_next)));
        let tn = t0.norm_sqr_f64().max(t1.norm_sqr_f64());
        max_t = max_t.max(tn);
        if tn < max_t * 1e-80 {
            break;
        }
    }
    // s1 is missing its m=0 term: H_0 + H_1 = 1.
    s1 = s1.add(DdC::ONE);
    let half_z = zd.mul_f64(0.5);
    let j1 = half_z.mul(j1s);

    // ln(z/2) + gamma, in double-double
    let modsq = half_z.re.mul(half_z.re).add(half_z.im.mul(half_z.im));
    let log_term = DdC {
        re: modsq.ln().mul_f64(0.5).add(DD_EULER),
        im: Dd::atan2(z.im, z.re),
    };

    let two_over_pi = Dd::from_f64(2.0).div(DD_PI);
    // Y0 = (2/pi)[(ln(z/2)+gamma) J0 + S0]
    let y0 = log_term.mul(j0).add(s0).mul_dd(two_over_pi);
    // Y1 = (2/pi)(ln(z/2)+gamma) J1 - 2/(pi z) - (z/(2 pi)) S1
    let zinv = DdC::ONE.div(zd);
    let y1 = log_term
        .mul(j1)
        .mul_dd(two_over_pi)
        .sub(zinv.mul_dd(two_over_pi))
        .sub(half_z.mul(s1).mul_dd(Dd::ONE.div(DD_PI)));

    let h0 = j0.add(y0.mul_i());
    let h1 = j1.add(y1.mul_i());
    BaseValues {
        j0: j0.to_c64(),
        j1: j1.to_c64(),
        y0: y0.to_c64(),
        y1: y1.to_c64(),
        h0: h0.to_c64(),
        h1: h1.to_c64(),
    }
}

/// Hankel's expansion H(1,2)_p(z) ~ sqrt(2/(pi z)) e^{+-i(z - p pi/2 - pi/4)}
/// sum_k (+-i)^k a_k(p)/z^k, truncated at the smallest term.
fn hankel_asym_pair(z: Complex64, p: u32) -> (Complex64, Complex64) {
    let mu = 4.0 * (p * p) as f64;
    let i_over_z = Complex64::new(0.0, 1.0) / z;
    let mut term1 = Complex64::new(1.0, 0.0);
    let mut term2 = Complex64::new(1.0, 0.0);
    let mut s1 = term1;
    let mut s2 = term2;
    let mut last = 1.0f64;
    for k in 0..60u32 {
        let factor = (mu - (2 * k + 1).pow(2) as f64) / (8.0 * (k + 1) as f64);
        term1 = term1 * i_over_z * factor;
        term2 = term2 * (-i_over_z) * factor;
        let t = term1.norm();
        if t >= last {
            break; // past the smallest term; stop before divergence
        }
        s1 += term1;
        s2 += term2;
        last = t;
        if t < 1e-18 {
            break;
        }
    }
    let amp = (Complex64::new(2.0, 0.0) / (std::f64::consts::PI * z)).sqrt();
    let phase = z - Complex64::new((p as f64 + 0.5) * std::f64::consts::FRAC_PI_2, 0.0);
    let e1 = (Complex64::new(0.0, 1.0) * phase).exp();
    let e2 = (Complex64::new(0.0, -1.0) * phase).exp();
    (amp * e1 * s1, amp * e2 * s2)
}

fn base_asymptotic(z: Complex64) -> BaseValues {
    let (h1_0, h2_0) = hankel_asym_pair(z, 0);
    let (h1_1, h2_1) = hankel_asym_pair(z, 1);
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, -0.5); // 1/(2i)
    BaseValues {
        j0: half * (h1_0 + h2_0),
        j1: half * (h1_1 + h2_1),
        y0: half_i * (h1_0 - h2_0),
        y1: half_i * (h1_1 - h2_1),
        h0: h1_0,
        h1: h1_1,
    }
}

/// J_p(z) for a single order by direct double-double series; |z| < 12.5.
fn j_series_dd(p: u32, z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        return if p == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
    }
    let zd = DdC::from_c64(z);
    let w = zd.mul(zd).mul_f64(0.25);
    // prefactor (z/2)^p / p! built multiplicatively to dodge factorial overflow
    let mut pref = DdC::ONE;
    let half_z = zd.mul_f64(0.5);
    for j in 1..=p {
        pref = pref.mul(half_z).div_f64(j as f64);
    }
    let mut term = DdC::ONE;
    let mut sum = DdC::ONE;
    let mut max_t = 1.0f64;
    for m in 1..=220u32 {
        let mf = m as f64;
        term = term.mul(w).div_f64(-mf * (mf + p as f64));
        sum = sum.add(term);
        let tn = term.norm_sqr_f64();
        max_t = max_t.max(tn);
        if tn < max_t * 1e-80 {
            break;
        }
    }
    pref.mul(sum).to_c64()
}

/// Growth margin for downward recurrence start, from the Airy transition
/// width near the turning point.
fn miller_pad(zn: f64) -> u32 {
    30 + (12.0 * zn.cbrt()).ceil() as u32
}

/// Exact power-of-two rescale bringing the largest component to O(1), so the
/// anchor division below cannot underflow its denominator.
pub(crate) fn prescale(out: &mut [Complex64]) {
    let mx = out.iter().fold(0.0f64, |a, v| a.max(v.re.abs()).max(v.im.abs()));
    if mx > 0.0 && mx.is_finite() {
        let s = (2.0f64).powi(-(mx.log2().round() as i32));
        for v in out.iter_mut() {
            *v *= s;
        }
    }
}

/// J_0..J_pmax for Im z >= 0.
///
/// Inside the series disk every order is summed directly in double-double;
/// beyond it a downward recurrence started `miller_pad` above the turning
/// point is anchored on the asymptotic base values.
pub(crate) fn j_family_upper(z: Complex64, pmax: u32) -> Vec<Complex64> {
    let base = base_upper(z);
    if pmax == 0 {
        return vec![base.j0];
    }
    if pmax == 1 {
        return vec![base.j0, base.j1];
    }
    let zn = z.norm();
    if zn < ASYM_SWITCH {
        let mut out: Vec<Complex64> = (0..=pmax).map(|p| j_series_dd(p, z)).collect();
        out[0] = base.j0;
        out[1] = base.j1;
        return out;
    }
    let mut out = vec![Complex64::new(0.0, 0.0); pmax as usize + 1];
    let start = pmax.max(zn.ceil() as u32) + miller_pad(zn);
    let mut fp1 = Complex64::new(0.0, 0.0);
    let mut f = Complex64::new(1e-250, 0.0);
    for m in (1..=start).rev() {
        let fm1 = f * (2.0 * m as f64) / z - fp1;
        fp1 = f;
        f = fm1;
        if (m as usize) <= pmax as usize {
            out[m as usize] = fp1;
        }
        if f.norm() > 1e260 {
            // rescale; stored orders this far below the running scale no
            // longer matter for the anchored result
            let s = 1e-260;
            f *= s;
            fp1 *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    out[0] = f;
    prescale(&mut out);
    // anchor the chain on the more reliable of the base values
    let scale = if base.j0.norm() >= base.j1.norm() {
        base.j0 / out[0]
    } else {
        base.j1 / out[1]
    };
    for v in out.iter_mut() {
        *v *= scale;
    }
    out[0] = base.j0;
    out[1] = base.j1;
    out
}

/// H(1)_0..H(1)_pmax for Im z >= 0 by upward recurrence (dominant direction).
pub(crate) fn h1_family_upper(z: Complex64, pmax: u32) -> Vec<Complex64> {
    let base = base_upper(z);
    let mut out = Vec::with_capacity(pmax as usize + 1);
    out.push(base.h0);
    if pmax >= 1 {
        out.push(base.h1);
    }
    for m in 1..pmax {
        let next = out[m as usize] * (2.0 * m as f64) / z - out[m as usize - 1];
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_matches_asymptotic_at_switchover() {
        // the two regimes must agree on a ring straddling |z| = 12.5
        for ang in [0.02, 0.4, 0.9, 1.3, 1.55] {
            let z = 12.6 * Complex64::new(f64::cos(ang), f64::sin(ang));
            let a = base_series(z);
            let b = base_asymptotic(z);
            assert!((a.j0 - b.j0).norm() <= 1e-11 * b.j0.norm());
            assert!((a.j1 - b.j1).norm() <= 1e-11 * b.j1.norm());
            assert!((a.h0 - b.h0).norm() <= 1e-11 * b.h0.norm());
            assert!((a.h1 - b.h1).norm() <= 1e-11 * b.h1.norm());
            assert!((a.y1 - b.y1).norm() <= 1e-11 * b.y1.norm());
        }
    }

    #[test]
    fn j_series_dd_small_orders_match_base() {
        for &(x, y) in &[(0.3, 0.0), (2.0, 1.0), (7.0, 5.0), (11.9, 0.1)] {
            let z = Complex64::new(x, y);
            let b = base_series(z);
            assert!((j_series_dd(0, z) - b.j0).norm() <= 1e-13 * b.j0.norm());
            assert!((j_series_dd(1, z) - b.j1).norm() <= 1e-13 * b.j1.norm());
        }
    }
}
