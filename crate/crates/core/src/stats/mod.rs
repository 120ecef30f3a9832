//! Shared numeric primitives used by the measure groups and summarizers.
//!
//! Conventions follow the measure definitions: standard deviation and
//! variance use the n-1 denominator, central moments m_j divide by n, the
//! median averages the two middle order statistics, and quantiles
//! interpolate linearly between order statistics.

pub mod shapiro;

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample variance with the n-1 denominator. Returns 0 for n < 2.
pub fn sample_var(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(values);
    values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n - 1) as f64
}

pub fn sample_sd(values: &[f64]) -> f64 {
    sample_var(values).sqrt()
}

/// Sample covariance with the n-1 denominator.
pub fn sample_cov(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    if n < 2 {
        return 0.0;
    }
    let mx = mean(x);
    let my = mean(y);
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - mx) * (b - my))
        .sum::<f64>()
        / (n - 1) as f64
}

/// Central moment m_j = (1/n) * sum (x - mean)^j.
pub fn central_moment(values: &[f64], j: i32) -> f64 {
    let m = mean(values);
    values.iter().map(|v| (v - m).powi(j)).sum::<f64>() / values.len() as f64
}

/// Excess kurtosis m4 / sd^4 - 3. `None` when the input is constant (or
/// too short), which is the division-by-zero exception case.
pub fn kurtosis(values: &[f64]) -> Option<f64> {
    let sd = sample_sd(values);
    if values.len() < 2 || sd == 0.0 {
        return None;
    }
    Some(central_moment(values, 4) / sd.powi(4) - 3.0)
}

/// Skewness m3 / sd^3, with the same exception behavior as [`kurtosis`].
pub fn skewness(values: &[f64]) -> Option<f64> {
    let sd = sample_sd(values);
    if values.len() < 2 || sd == 0.0 {
        return None;
    }
    Some(central_moment(values, 3) / sd.powi(3))
}

pub fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Median: mean of the two middle order statistics for even n.
pub fn median(values: &[f64]) -> f64 {
    let s = sorted(values);
    let n = s.len();
    if n % 2 == 0 {
        (s[n / 2 - 1] + s[n / 2]) / 2.0
    } else {
        s[n / 2]
    }
}

/// Quantile by linear interpolation between order statistics (R type 7).
/// Input must be sorted ascending.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    debug_assert!(n > 0);
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 >= n {
        sorted[n - 1]
    } else {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    }
}

/// (Q1, Q3) interquartile bounds.
pub fn quartile_bounds(values: &[f64]) -> (f64, f64) {
    let s = sorted(values);
    (quantile_sorted(&s, 0.25), quantile_sorted(&s, 0.75))
}

pub fn iqr(values: &[f64]) -> f64 {
    let (q1, q3) = quartile_bounds(values);
    q3 - q1
}

/// Median absolute deviation, without a consistency constant.
pub fn mad(values: &[f64]) -> f64 {
    let med = median(values);
    let dev: Vec<f64> = values.iter().map(|v| (v - med).abs()).collect();
    median(&dev)
}

/// Geometric mean via the sum of logs; `None` if any value is <= 0.
pub fn geometric_mean(values: &[f64]) -> Option<f64> {
    if values.iter().any(|&v| v <= 0.0) {
        return None;
    }
    Some((values.iter().map(|v| v.ln()).sum::<f64>() / values.len() as f64).exp())
}

/// Harmonic mean n / sum(1/x). May be non-finite when values mix signs or
/// contain zero; callers treat non-finite results as failed elements.
pub fn harmonic_mean(values: &[f64]) -> f64 {
    values.len() as f64 / values.iter().map(|v| 1.0 / v).sum::<f64>()
}

/// Trimmed mean dropping ceil(n*alpha) order statistics from each tail.
/// Falls back to the median when nothing remains.
pub fn trimmed_mean(values: &[f64], alpha: f64) -> f64 {
    let n = values.len();
    let i = (n as f64 * alpha).ceil() as usize;
    if 2 * i >= n {
        return median(values);
    }
    let s = sorted(values);
    s[i..n - i].iter().sum::<f64>() / (n - 2 * i) as f64
}

/// True when any value falls outside the Tukey fences
/// [Q1 - 1.5 IQR, Q3 + 1.5 IQR].
pub fn has_tukey_outlier(values: &[f64]) -> bool {
    let (q1, q3) = quartile_bounds(values);
    let spread = 1.5 * (q3 - q1);
    let (lo, hi) = (q1 - spread, q3 + spread);
    values.iter().any(|&v| v < lo || v > hi)
}

/// Average ranks (1-based), ties receive the mean of their rank range.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for k in i..=j {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Pearson correlation; `None` when either input is constant.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let sx = sample_sd(x);
    let sy = sample_sd(y);
    if sx == 0.0 || sy == 0.0 || x.len() < 2 {
        return None;
    }
    Some(sample_cov(x, y) / (sx * sy))
}

/// Spearman correlation: Pearson over average ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    pearson(&average_ranks(x), &average_ranks(y))
}

/// Kendall tau-b with tie correction; `None` when either input is constant.
pub fn kendall(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len();
    if n < 2 {
        return None;
    }
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i] - x[j];
            let dy = y[i] - y[j];
            if dx * dy > 0.0 {
                concordant += 1;
            } else if dx * dy < 0.0 {
                discordant += 1;
            }
        }
    }
    let n0 = (n * (n - 1) / 2) as i64;
    let denom = (((n0 - count_joint_ties(x)) as f64) * ((n0 - count_joint_ties(y)) as f64)).sqrt();
    if denom == 0.0 {
        return None;
    }
    Some((concordant - discordant) as f64 / denom)
}

/// Number of tied pairs within a single vector.
fn count_joint_ties(v: &[f64]) -> i64 {
    let s = sorted(v);
    let mut total = 0i64;
    let mut i = 0;
    while i < s.len() {
        let mut j = i;
        while j + 1 < s.len() && s[j + 1] == s[i] {
            j += 1;
        }
        let t = (j - i + 1) as i64;
        total += t * (t - 1) / 2;
        i = j + 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_descriptives() {
        let v = [1.0, 2.0, 3.0];
        assert_eq!(mean(&v), 2.0);
        assert_eq!(sample_sd(&v), 1.0);
        assert_eq!(sample_var(&v), 1.0);
        assert_eq!(mad(&v), 1.0);
        assert_eq!(median(&v), 2.0);
    }

    #[test]
    fn quantile_type7_matches_hand_oracle() {
        // Hand oracle for [1,2,3,4]: h = 3p, interpolate order statistics.
        let s = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_sorted(&s, 0.0), 1.0);
        assert_eq!(quantile_sorted(&s, 0.25), 1.75);
        assert_eq!(quantile_sorted(&s, 0.5), 2.5);
        assert_eq!(quantile_sorted(&s, 0.75), 3.25);
        assert_eq!(quantile_sorted(&s, 1.0), 4.0);
    }

    #[test]
    fn geometric_and_harmonic() {
        assert!((geometric_mean(&[1.0, 2.0, 4.0]).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(geometric_mean(&[1.0, -2.0]), None);
        assert_eq!(geometric_mean(&[0.0, 2.0]), None);
        let h = harmonic_mean(&[1.0, 2.0, 4.0]);
        assert!((h - 3.0 / 1.75).abs() < 1e-12);
    }

    #[test]
    fn trimmed_mean_ceil_rule() {
        // n=5, alpha=0.2 -> drop 1 from each tail.
        let v = [100.0, 1.0, 2.0, 3.0, -50.0];
        assert_eq!(trimmed_mean(&v, 0.2), 2.0);
        // Degenerate: everything trimmed -> median.
        assert_eq!(trimmed_mean(&[1.0, 2.0], 0.4), 1.5);
    }

    #[test]
    fn moments_and_shapes() {
        let v = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert!(skewness(&v).unwrap().abs() < 1e-12);
        assert_eq!(kurtosis(&[7.0, 7.0, 7.0]), None);
        assert_eq!(skewness(&[7.0, 7.0, 7.0]), None);
    }

    #[test]
    fn outlier_fences_by_hand() {
        // 19 ones and a 1000: Q1 = Q3 = 1, fences collapse to [1, 1].
        let mut v = vec![1.0; 19];
        v.push(1000.0);
        assert!(has_tukey_outlier(&v));
        let grid: Vec<f64> = (1..=100).map(|v| v as f64).collect();
        assert!(!has_tukey_outlier(&grid));
    }

    #[test]
    fn rank_ties_averaged() {
        let r = average_ranks(&[10.0, 20.0, 20.0, 30.0]);
        assert_eq!(r, vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn correlations() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y = [2.0, 4.0, 6.0, 8.0];
        assert!((pearson(&x, &y).unwrap() - 1.0).abs() < 1e-12);
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!((pearson(&x, &neg).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(pearson(&x, &[5.0; 4]), None);
        assert!((spearman(&x, &y).unwrap() - 1.0).abs() < 1e-12);
        assert!((kendall(&x, &neg).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn spearman_monotone_nonlinear() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        let y: Vec<f64> = x.iter().map(|v| v.exp()).collect();
        assert!((spearman(&x, &y).unwrap() - 1.0).abs() < 1e-12);
    }
}
