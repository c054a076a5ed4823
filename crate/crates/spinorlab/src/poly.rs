//! Univariate complex polynomials: interpolation at Chebyshev nodes, Aberth–Ehrlich roots and
//! root clustering.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{re, C64, ZERO};

/// Coefficients in ascending order: `c[0] + c[1] x + …`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialC {
    pub coeffs: Vec<C64>,
}

impl PolynomialC {
    pub fn new(coeffs: Vec<C64>) -> Self {
        PolynomialC { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        PolynomialC { coeffs: coeffs.iter().map(|&x| re(x)).collect() }
    }

    /// ∏ (x − r).
    pub fn from_roots(roots: &[C64]) -> Self {
        let mut c = vec![re(1.0)];
        for &r in roots {
            let mut next = vec![ZERO; c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            c = next;
        }
        PolynomialC { coeffs: c }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> C64 {
        self.coeffs.last().copied().unwrap_or(ZERO)
    }

    pub fn eval(&self, x: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }

    /// (p(x), p′(x)) by Horner.
    pub fn eval_with_derivative(&self, x: C64) -> (C64, C64) {
        let mut p = ZERO;
        let mut d = ZERO;
        for &c in self.coeffs.iter().rev() {
            d = d * x + p;
            p = p * x + c;
        }
        (p, d)
    }

    /// Drop leading coefficients with `|c_k| scale^k ≤ rel · max_j |c_j| scale^j`.
    pub fn trimmed(&self, scale: f64, rel: f64) -> PolynomialC {
        let weighted: Vec<f64> = self.coeffs.iter().enumerate().map(|(k, c)| c.norm() * scale.powi(k as i32)).collect();
        let big = weighted.iter().cloned().fold(0.0, f64::max);
        let mut n = self.coeffs.len();
        while n > 1 && weighted[n - 1] <= rel * big {
            n -= 1;
        }
        PolynomialC { coeffs: self.coeffs[..n].to_vec() }
    }

    pub fn derivative(&self) -> PolynomialC {
        if self.coeffs.len() <= 1 {
            return PolynomialC { coeffs: vec![ZERO] };
        }
        PolynomialC { coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect() }
    }

    /// Roots by Aberth–Ehrlich simultaneous iteration.
    pub fn roots(&self) -> Result<Vec<C64>> {
        aberth(self)
    }
}

/// n Chebyshev points of the first kind on [−s, s].
pub fn chebyshev_nodes(n: usize, s: f64) -> Vec<f64> {
    (0..n).map(|j| s * (std::f64::consts::PI * (j as f64 + 0.5) / n as f64).cos()).collect()
}

/// Degree ≤ n−1 interpolant of `values` taken at `chebyshev_nodes(n, s)`, in monomial form in x.
pub fn chebyshev_interpolate(values: &[C64], s: f64) -> PolynomialC {
    let n = values.len();
    // Chebyshev coefficients in t = x/s.
    let mut a = vec![ZERO; n];
    for (k, ak) in a.iter_mut().enumerate() {
        let mut acc = ZERO;
        for (j, &v) in values.iter().enumerate() {
            acc += v * (std::f64::consts::PI * k as f64 * (j as f64 + 0.5) / n as f64).cos();
        }
        *ak = acc * (2.0 / n as f64);
    }
    a[0] *= 0.5;
    // Σ a_k T_k(t) to monomials via T_{k+1} = 2t T_k − T_{k−1}.
    let mut t = vec![vec![0.0; n]; n];
    t[0][0] = 1.0;
    if n > 1 {
        t[1][1] = 1.0;
    }
    for k in 2..n {
        for m in 0..n {
            let up = if m > 0 { 2.0 * t[k - 1][m - 1] } else { 0.0 };
            t[k][m] = up - t[k - 2][m];
        }
    }
    let mono: Vec<C64> = (0..n).map(|m| (0..n).map(|k| a[k] * t[k][m]).sum()).collect();
    // rescale t = x/s
    let coeffs = mono.iter().enumerate().map(|(k, &c)| c / s.powi(k as i32)).collect();
    PolynomialC { coeffs }
}

const MAX_ITER: usize = 2000;

fn aberth(p: &PolynomialC) -> Result<Vec<C64>> {
    let n = p.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = p.leading();
    if lead == ZERO {
        return Err(Error::Invalid("leading coefficient is zero".into()));
    }
    // Fujiwara-type bound for the initial circle.
    let radius = (0..n)
        .map(|k| (p.coeffs[k] / lead).norm().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        .max(1e-300);
    let mut z: Vec<C64> = (0..n)
        .map(|k| C64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let abs_coeffs: Vec<f64> = p.coeffs.iter().map(|a| a.norm()).collect();
    // |p(z)| below the rounding level of its evaluation: further steps are noise
    let noise = |x: C64| {
        let r = x.norm();
        4.0 * f64::EPSILON * abs_coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a)
    };
    let mut done = vec![false; n];
    for _ in 0..MAX_ITER {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (v, d) = p.eval_with_derivative(z[i]);
            if v.norm() <= noise(z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = v / d;
            let sum: C64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * sum);
            if !w.is_finite() {
                continue;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(radius * 1e-3));
        }
        if moved < 1e-15 || done.iter().all(|&d| d) {
            break;
        }
    }
    if z.iter().any(|x| !x.is_finite()) {
        return Err(Error::Invalid("root iteration diverged".into()));
    }
    Ok(z)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootCluster {
    pub center: C64,
    pub multiplicity: usize,
}

/// Group roots closer than `radius` (transitively); each cluster is reported by its centroid,
/// which is far better conditioned than the individual members of a multiple root.
pub fn cluster_roots(roots: &[C64], radius: f64) -> Vec<RootCluster> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<C64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => g.1.push(roots[i]),
            None => groups.push((r, vec![roots[i]])),
        }
    }
    let mut out: Vec<RootCluster> = groups
        .into_iter()
        .map(|(_, g)| RootCluster { center: g.iter().sum::<C64>() / g.len() as f64, multiplicity: g.len() })
        .collect();
    out.sort_by(|a, b| a.center.re.total_cmp(&b.center.re).then(a.center.im.total_cmp(&b.center.im)));
    out
}

/// Roots grouped into clusters of radius `radius`; a cluster of multiplicity m is polished by
/// Newton steps on p^(m−1), where it is a simple root.
pub fn clustered_roots(p: &PolynomialC, radius: f64) -> Result<Vec<RootCluster>> {
    let mut clusters = cluster_roots(&p.roots()?, radius);
    for cl in &mut clusters {
        let mut q = p.clone();
        for _ in 1..cl.multiplicity {
            q = q.derivative();
        }
        let dq = q.derivative();
        let mut z = cl.center;
        for _ in 0..8 {
            let d = dq.eval(z);
            if d == ZERO {
                break;
            }
            let step = q.eval(z) / d;
            if !step.is_finite() || step.norm() > radius {
                break;
            }
            z -= step;
            if step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
        }
        cl.center = z;
    }
    Ok(clusters)
}

/// Interpolate `f` on `n` Chebyshev nodes in [−scale, scale] and check the fit at extra points; on misfit the
/// node interval is widened and the fit repeated.
pub fn interpolate_checked<F>(f: F, n: usize, scale: f64) -> Result<(PolynomialC, f64)>
where
    F: Fn(f64) -> C64,
{
    let mut s = scale;
    let mut last = f64::INFINITY;
    for _ in 0..4 {
        let nodes = chebyshev_nodes(n, s);
        let values: Vec<C64> = nodes.iter().map(|&x| f(x)).collect();
        let poly = chebyshev_interpolate(&values, s);
        let big = values.iter().map(|v| v.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        let misfit = [0.123, -0.377, 0.61, -0.89, 0.95]
            .iter()
            .map(|&t| (poly.eval(re(t * s)) - f(t * s)).norm() / big)
            .fold(0.0, f64::max);
        if misfit <= 1e-9 {
            return Ok((poly, misfit));
        }
        last = misfit;
        s *= 1.5;
    }
    Err(Error::Interpolation(format!("fit misfit {last:e} after re-sampling")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c;

    #[test]
    fn from_roots_and_eval() {
        let p = PolynomialC::from_roots(&[re(1.0), re(-2.0), c(0.0, 3.0)]);
        assert_eq!(p.degree(), 3);
        assert!(p.eval(re(-2.0)).norm() < 1e-12);
        let (v, d) = p.eval_with_derivative(re(1.0));
        assert!(v.norm() < 1e-12);
        // p′(1) = (1+2)(1−3i)
        assert!((d - c(3.0, -9.0)).norm() < 1e-12);
    }

    #[test]
    fn interpolation_reproduces_polynomial() {
        let p = PolynomialC::from_real(&[2.0, 0.0, -3.0, 0.5, 0.0, 1.0]);
        let nodes = chebyshev_nodes(8, 2.5);
        let vals: Vec<C64> = nodes.iter().map(|&x| p.eval(re(x))).collect();
        let q = chebyshev_interpolate(&vals, 2.5).trimmed(2.5, 1e-12);
        assert_eq!(q.degree(), 5);
        for (a, b) in q.coeffs.iter().zip(&p.coeffs) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn simple_roots() {
        let want = [re(-1.5), re(0.0), re(2.0), c(1.0, 1.0), c(1.0, -1.0)];
        let mut got = PolynomialC::from_roots(&want).roots().unwrap();
        got.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let mut w = want.to_vec();
        w.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        for (a, b) in got.iter().zip(&w) {
            assert!((a - b).norm() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn multiple_roots_cluster_to_accurate_centroids() {
        let e0 = 2f64.sqrt();
        let p = PolynomialC::from_roots(&[re(e0), re(e0), re(e0), re(-e0), re(-e0), re(-e0)]);
        let cl = clustered_roots(&p, 1e-3).unwrap();
        assert_eq!(cl.len(), 2);
        assert!(cl.iter().all(|k| k.multiplicity == 3));
        assert!((cl[0].center + re(e0)).norm() < 1e-12, "{cl:?}");
        assert!((cl[1].center - re(e0)).norm() < 1e-12, "{cl:?}");
    }

    #[test]
    fn checked_interpolation() {
        let f = |x: f64| re(x * x * x - 4.0 * x);
        let (p, misfit) = interpolate_checked(f, 5, 2.0).unwrap();
        assert!(misfit < 1e-12);
        assert_eq!(p.trimmed(2.0, 1e-12).degree(), 3);
    }
}
