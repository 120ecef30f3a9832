//! Shapiro-Wilk W test for normality, following Royston's AS R94 remark
//! (Applied Statistics 44, 1995), the same algorithm behind R's
//! `shapiro.test`. Valid for sample sizes 3..=5000.

use statrs::function::erf::erfc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapiroError {
    TooFewSamples,
    TooManySamples,
    ConstantSample,
}

/// Returns the (W, p-value) pair for the sample.
pub fn shapiro_wilk(sample: &[f64]) -> Result<(f64, f64), ShapiroError> {
    let n = sample.len();
    if n < 3 {
        return Err(ShapiroError::TooFewSamples);
    }
    if n > 5000 {
        return Err(ShapiroError::TooManySamples);
    }
    let mut x = sample.to_vec();
    x.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let range = x[n - 1] - x[0];
    if range <= 0.0 {
        return Err(ShapiroError::ConstantSample);
    }

    let nn2 = n / 2;
    let mut a = vec![0.0f64; nn2 + 1]; // 1-based like the reference code
    if n == 3 {
        a[1] = std::f64::consts::FRAC_1_SQRT_2;
    } else {
        coefficients(&mut a, n);
    }

    // W as the squared correlation between the scaled order statistics
    // and the coefficient vector (antisymmetric around the middle).
    let mut sx = 0.0;
    let mut sa = 0.0;
    for i in 0..n {
        sx += x[i] / range;
        sa += coefficient_at(&a, i, n);
    }
    sx /= n as f64;
    sa /= n as f64;

    let mut ssa = 0.0;
    let mut ssx = 0.0;
    let mut sax = 0.0;
    for i in 0..n {
        let asa = coefficient_at(&a, i, n) - sa;
        let xsx = x[i] / range - sx;
        ssa += asa * asa;
        ssx += xsx * xsx;
        sax += asa * xsx;
    }
    let ssassx = (ssa * ssx).sqrt();
    let w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    let w = (1.0 - w1).clamp(0.0, 1.0);

    Ok((w, p_value(w, n)))
}

/// Signed coefficient for position i (0-based): negative in the lower
/// half, positive in the upper half, zero at an odd middle.
fn coefficient_at(a: &[f64], i: usize, n: usize) -> f64 {
    let j = n - 1 - i;
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => -a[i + 1],
        Greater => a[j + 1],
        Equal => 0.0,
    }
}

/// Royston (1995) polynomial-corrected normal scores, stored in a[1..=n/2]
/// as the magnitudes of the lower-half coefficients.
fn coefficients(a: &mut [f64], n: usize) {
    let nn2 = n / 2;
    let an = n as f64;
    let an25 = an + 0.25;
    let mut summ2 = 0.0;
    for (i, slot) in a.iter_mut().enumerate().skip(1).take(nn2) {
        *slot = qnorm((i as f64 - 0.375) / an25);
        summ2 += *slot * *slot;
    }
    summ2 *= 2.0;
    let ssumm2 = summ2.sqrt();
    let rsn = 1.0 / an.sqrt();

    const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
    const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];

    let a1 = poly(&C1, rsn) - a[1] / ssumm2;
    let (first_unscaled, fac) = if n > 5 {
        let a2 = -a[2] / ssumm2 + poly(&C2, rsn);
        let fac = ((summ2 - 2.0 * a[1] * a[1] - 2.0 * a[2] * a[2])
            / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2))
            .sqrt();
        a[2] = a2;
        (3, fac)
    } else {
        let fac = ((summ2 - 2.0 * a[1] * a[1]) / (1.0 - 2.0 * a1 * a1)).sqrt();
        (2, fac)
    };
    a[1] = a1;
    for slot in a.iter_mut().take(nn2 + 1).skip(first_unscaled) {
        *slot /= -fac;
    }
}

/// Upper-tail p-value for the W statistic.
fn p_value(w: f64, n: usize) -> f64 {
    if w >= 1.0 {
        return 1.0;
    }
    if n == 3 {
        // Exact small-sample distribution.
        let pi6 = 6.0 / std::f64::consts::PI;
        let stqr = std::f64::consts::FRAC_PI_3;
        return (pi6 * (w.sqrt().asin() - stqr)).clamp(0.0, 1.0);
    }

    let an = n as f64;
    let y = (1.0 - w).ln();
    const G: [f64; 2] = [-2.273, 0.459];
    const C3: [f64; 4] = [0.5440, -0.39978, 0.025054, -0.0006714];
    const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
    const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
    const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];

    let (z, m, s) = if n <= 11 {
        let gamma = poly(&G, an);
        if y >= gamma {
            return 1e-99;
        }
        ((-(gamma - y).ln(), poly(&C3, an), poly(&C4, an).exp()))
    } else {
        let lx = an.ln();
        (y, poly(&C5, lx), poly(&C6, lx).exp())
    };
    // P(Z > z) under N(m, s).
    0.5 * erfc((z - m) / (s * std::f64::consts::SQRT_2))
}

fn poly(c: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &coef in c.iter().rev() {
        acc = acc * x + coef;
    }
    acc
}

/// Normal quantile function, Wichura's algorithm AS 241 (PPND16).
pub fn qnorm(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * rational(r, &A_COEF, &B_COEF);
    }
    let mut r = if q < 0.0 { p } else { 1.0 - p };
    r = (-r.ln()).sqrt();
    let z = if r <= 5.0 {
        rational(r - 1.6, &C_COEF, &D_COEF)
    } else {
        rational(r - 5.0, &E_COEF, &F_COEF)
    };
    if q < 0.0 {
        -z
    } else {
        z
    }
}

fn rational(r: f64, num: &[f64; 8], den: &[f64; 8]) -> f64 {
    let mut p = 0.0;
    let mut q = 0.0;
    for i in (0..8).rev() {
        p = p * r + num[i];
        q = q * r + den[i];
    }
    p / q
}

const A_COEF: [f64; 8] = [
    3.387_132_872_796_366_5,
    1.331_416_678_917_843_8e2,
    1.971_590_950_306_551_3e3,
    1.373_169_376_550_946e4,
    4.592_195_393_154_987e4,
    6.726_577_092_700_87e4,
    3.343_057_558_358_813e4,
    2.509_080_928_730_122_7e3,
];
const B_COEF: [f64; 8] = [
    1.0,
    4.231_333_070_160_091e1,
    6.871_870_074_920_579e2,
    5.394_196_021_424_751e3,
    2.121_379_430_158_66e4,
    3.930_789_580_009_271e4,
    2.872_908_573_572_194_3e4,
    5.226_495_278_852_545e3,
];
const C_COEF: [f64; 8] = [
    1.423_437_110_749_683_5,
    4.630_337_846_156_546,
    5.769_497_221_460_691,
    3.647_848_324_763_204_5,
    1.270_458_252_452_368_4,
    2.417_807_251_774_506e-1,
    2.272_384_498_926_918_4e-2,
    7.745_450_142_783_414e-4,
];
const D_COEF: [f64; 8] = [
    1.0,
    2.053_191_626_637_759,
    1.676_384_830_183_803_8,
    6.897_673_349_851e-1,
    1.481_039_764_274_800_8e-1,
    1.519_866_656_361_645_7e-2,
    5.475_938_084_995_345e-4,
    1.050_750_071_644_416_9e-9,
];
const E_COEF: [f64; 8] = [
    6.657_904_643_501_103,
    5.463_784_911_164_114,
    1.784_826_539_917_291_3,
    2.965_605_718_285_048_7e-1,
    2.653_218_952_657_612_4e-2,
    1.242_660_947_388_078_4e-3,
    2.711_555_568_743_487_6e-5,
    2.010_334_399_292_288_1e-7,
];
const F_COEF: [f64; 8] = [
    1.0,
    5.998_322_065_558_88e-1,
    1.369_298_809_227_358e-1,
    1.487_536_129_085_061_5e-2,
    7.868_691_311_456_132_5e-4,
    1.846_318_317_510_054_8e-6,
    1.421_511_758_316_446e-7,
    2.044_263_103_389_939_7e-15,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qnorm_reference_values() {
        // Reference values from R's qnorm (Wichura AS 241).
        assert!((qnorm(0.5) - 0.0).abs() < 1e-15);
        assert!((qnorm(0.975) - 1.959963984540054).abs() < 1e-12);
        assert!((qnorm(0.025) + 1.959963984540054).abs() < 1e-12);
        assert!((qnorm(0.0001) + 3.719016485455709).abs() < 1e-11);
        assert!((qnorm(0.99) - 2.3263478740408408).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_samples() {
        assert_eq!(shapiro_wilk(&[1.0, 2.0]), Err(ShapiroError::TooFewSamples));
        assert_eq!(
            shapiro_wilk(&[3.0, 3.0, 3.0, 3.0]),
            Err(ShapiroError::ConstantSample)
        );
    }

    #[test]
    fn matches_r_reference_small_sample() {
        // R: shapiro.test(c(148,154,158,160,161,162,166,170,182,195,236))
        // W = 0.79, p-value = 0.007065
        let x = [
            148.0, 154.0, 158.0, 160.0, 161.0, 162.0, 166.0, 170.0, 182.0, 195.0, 236.0,
        ];
        let (w, p) = shapiro_wilk(&x).unwrap();
        assert!((w - 0.7888).abs() < 5e-4, "w={w}");
        assert!((p - 0.007065).abs() < 5e-5, "p={p}");
    }

    #[test]
    fn matches_r_reference_n12_branch() {
        // R: shapiro.test(1:12) -> W = 0.96593, p-value = 0.8661
        let x: Vec<f64> = (1..=12).map(|v| v as f64).collect();
        let (w, p) = shapiro_wilk(&x).unwrap();
        assert!((w - 0.96593).abs() < 5e-5, "w={w}");
        assert!((p - 0.8661).abs() < 5e-4, "p={p}");
    }

    #[test]
    fn uniform_grid_large_n_rejected_as_normal() {
        let x: Vec<f64> = (1..=500).map(|v| v as f64).collect();
        let (_, p) = shapiro_wilk(&x).unwrap();
        assert!(p < 0.05);
    }

    #[test]
    fn exponential_data_rejected() {
        // Strongly skewed data must fail the test decisively.
        let x: Vec<f64> = (1..=50).map(|v| (v as f64 / 3.0).exp()).collect();
        let (_, p) = shapiro_wilk(&x).unwrap();
        assert!(p < 1e-6);
    }
}
