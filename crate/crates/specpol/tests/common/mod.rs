//! Shared oracle machinery for integration tests: an independent polynomial
//! root finder, a symbolic pencil determinant for small dimensions, random
//! Hermitian generators, and point-set matching helpers.
//!
//! Everything here deliberately avoids the library's companion-linearization
//! path so that spectra can be cross-checked through a second route.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::prelude::*;
use specpol::operators::MomentMatrices;

/// Dense complex polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: Complex64) -> Self {
        Poly(vec![c])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// All roots by Durand–Kerner iteration; independent of any
    /// eigenvalue-based path. Reliable for the simple, well-separated roots
    /// this suite feeds it.
    pub fn roots(&self) -> Vec<Complex64> {
        let mut coeffs = self.0.clone();
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        let deg = coeffs.len().saturating_sub(1);
        if deg == 0 {
            return vec![];
        }
        let lead = coeffs[deg];
        let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
        let radius = 1.0
            + monic
                .iter()
                .take(deg)
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
        let mut zs: Vec<Complex64> = (0..deg)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.45;
                Complex64::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect();
        let p = Poly(monic);
        for _ in 0..500 {
            let mut max_step = 0.0f64;
            for i in 0..deg {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..deg {
                    if j != i {
                        denom *= zs[i] - zs[j];
                    }
                }
                if denom.norm() == 0.0 {
                    zs[i] += Complex64::new(1e-8, 1e-8);
                    continue;
                }
                let step = p.eval(zs[i]) / denom;
                zs[i] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-15 * radius {
                break;
            }
        }
        zs
    }
}

/// det(z²I − 2zA + B) expanded symbolically by Leibniz permutation sum;
/// practical for d ≤ 4 and entirely separate from the companion route.
pub fn symbolic_pencil_determinant(m: &MomentMatrices) -> Poly {
    let d = m.dim();
    assert!(d <= 4, "symbolic determinant oracle is meant for d <= 4");
    let entry = |j: usize, k: usize| -> Poly {
        let mut coeffs = vec![m.b()[(j, k)], -2.0 * m.a()[(j, k)]];
        if j == k {
            coeffs.push(Complex64::new(1.0, 0.0));
        } else {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Poly(coeffs)
    };
    let mut total = Poly::zero();
    let mut perm: Vec<usize> = (0..d).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut term = Poly::constant(Complex64::new(sign, 0.0));
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(&entry(row, col));
        }
        total = total.add(&term);
    });
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], f64)) {
    let d = perm.len();
    if k == d {
        let mut sign = 1.0;
        let mut seen = vec![false; d];
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        visit(perm, sign);
        return;
    }
    for i in k..d {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Random Hermitian matrix with entries uniform in (−scale, scale).
pub fn random_hermitian(rng: &mut StdRng, d: usize, scale: f64) -> faer::Mat<Complex64> {
    let mut a = faer::Mat::<Complex64>::zeros(d, d);
    for j in 0..d {
        a[(j, j)] = Complex64::new(rng.random_range(-scale..scale), 0.0);
        for k in (j + 1)..d {
            let re = rng.random_range(-scale..scale);
            let im = rng.random_range(-scale..scale);
            a[(j, k)] = Complex64::new(re, im);
            a[(k, j)] = Complex64::new(re, -im);
        }
    }
    a
}

/// Greedy multiset matching: pair every target with its nearest remaining
/// point and return the largest pairing distance.
pub fn multiset_match_error(points: &[Complex64], targets: &[Complex64]) -> f64 {
    assert_eq!(points.len(), targets.len(), "multisets must have equal size");
    let mut pool = points.to_vec();
    let mut worst = 0.0f64;
    for t in targets {
        let (idx, dist) = pool
            .iter()
            .enumerate()
            .map(|(i, z)| (i, (z - t).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .expect("pool nonempty");
        worst = worst.max(dist);
        pool.swap_remove(idx);
    }
    worst
}

pub fn min_distance(point: Complex64, cloud: &[Complex64]) -> f64 {
    cloud
        .iter()
        .map(|z| (z - point).norm())
        .fold(f64::INFINITY, f64::min)
}

pub fn directed_hausdorff(from: &[Complex64], to: &[Complex64]) -> f64 {
    from.iter()
        .map(|p| min_distance(*p, to))
        .fold(0.0f64, f64::max)
}

pub fn symmetric_hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn durand_kerner_finds_known_roots() {
        // (z - 1)(z - 2i)(z + 3) = z^3 + (2 - 2i) z^2 + (-3 - 4i) z + ... build by multiplication
        let p = Poly(vec![Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)])
            .mul(&Poly(vec![Complex64::new(0.0, -2.0), Complex64::new(1.0, 0.0)]))
            .mul(&Poly(vec![Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0)]));
        let roots = p.roots();
        let targets = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(-3.0, 0.0),
        ];
        assert!(multiset_match_error(&roots, &targets) < 1e-12);
    }

    #[test]
    fn leibniz_sign_matches_two_by_two() {
        use specpol::operators::MomentMatrices;
        // A = [[0, 1], [1, 0]], B = I: det = (z^2+1)^2 - 4 z^2
        let a = faer::Mat::from_fn(2, 2, |j, k| {
            Complex64::new(if j != k { 1.0 } else { 0.0 }, 0.0)
        });
        let b = faer::Mat::from_fn(2, 2, |j, k| {
            Complex64::new(if j == k { 1.0 } else { 0.0 }, 0.0)
        });
        let m = MomentMatrices::from_parts("two", None, a, b).unwrap();
        let det = symbolic_pencil_determinant(&m);
        for z in [Complex64::new(0.3, 0.7), Complex64::new(-1.2, 0.1)] {
            let z2 = z * z;
            let expected = (z2 + 1.0) * (z2 + 1.0) - 4.0 * z2;
            assert!((det.eval(z) - expected).norm() < 1e-12);
        }
    }
}
