//! Determinants whose averages the rest of the crate computes: the plain
//! ratio of characteristic polynomials and the block-linearized extensions
//! used for the non-Hermitian ensembles.
//!
//! Everything goes through a dense LU determinant of the assembled block
//! matrix.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{block2x2, block_grid, determinant, kron, ComplexMatrix};

fn ensure_square(name: &str, m: &ComplexMatrix) -> Result<usize> {
    if m.is_square() {
        Ok(m.n_rows())
    } else {
        Err(Error::dimension(format!(
            "{name} must be square, got {}x{}",
            m.n_rows(),
            m.n_cols()
        )))
    }
}

fn ensure_positive(name: &str, d: &[f64], n: usize) -> Result<()> {
    if d.len() != n {
        return Err(Error::dimension(format!(
            "{name} has {} entries, expected {n}",
            d.len()
        )));
    }
    if d.iter().any(|&g| !(g > 0.0 && g.is_finite())) {
        return Err(Error::domain(format!("{name} must be strictly positive")));
    }
    Ok(())
}

/// `det(z − H) / det(w − H)`.
pub fn ratio_d(z: C64, w: C64, h: &ComplexMatrix) -> Result<C64> {
    ensure_square("h", h)?;
    let den = determinant(&h.shifted_from(w)?)?;
    if den == C64::new(0.0, 0.0) {
        return Err(Error::Singular(format!("w = {w} is an eigenvalue of h")));
    }
    Ok(determinant(&h.shifted_from(z)?)? / den)
}

/// The `2kN` determinant
///
/// ```text
/// | Z⊗1 − 1⊗X    −A†⊗1      |
/// | A⊗1          Z̄⊗1 − 1⊗X† |
/// ```
///
/// with `Z = diag(zs)`. At `a = 0` it equals `∏ᵢ |det(zᵢ − X)|²`.
pub fn keacp_d(zs: &[C64], a: &ComplexMatrix, x: &ComplexMatrix) -> Result<C64> {
    let n = ensure_square("x", x)?;
    let k = zs.len();
    if k == 0 || a.n_rows() != k || a.n_cols() != k {
        return Err(Error::dimension(format!(
            "a is {}x{} but {k} spectral arguments were given",
            a.n_rows(),
            a.n_cols()
        )));
    }
    let id_n = ComplexMatrix::identity(n);
    let id_k = ComplexMatrix::identity(k);
    let zd = ComplexMatrix::from_diag(zs);
    let top_left = kron(&zd, &id_n).try_sub(&kron(&id_k, x))?;
    let bottom_right = kron(&zd.adjoint(), &id_n).try_sub(&kron(&id_k, &x.adjoint()))?;
    let top_right = kron(&a.adjoint(), &id_n).scale(C64::new(-1.0, 0.0));
    let bottom_left = kron(a, &id_n);
    determinant(&block2x2(&top_left, &top_right, &bottom_left, &bottom_right)?)
}

/// The `2N` determinant
///
/// ```text
/// | z − Γ⁻¹XΩ⁻¹   −Γ⁻² w̄       |
/// | Ω⁻² w         z̄ − Ω⁻¹X†Γ⁻¹ |
/// ```
///
/// for positive diagonal `Γ`, `Ω` given by their diagonals.
pub fn correlated_d(
    z: C64,
    x: &ComplexMatrix,
    gamma: &[f64],
    omega: &[f64],
    w: C64,
) -> Result<C64> {
    let n = ensure_square("x", x)?;
    ensure_positive("gamma", gamma, n)?;
    ensure_positive("omega", omega, n)?;
    let ginv = ComplexMatrix::from_real_diag(&gamma.iter().map(|g| g.recip()).collect::<Vec<_>>());
    let oinv = ComplexMatrix::from_real_diag(&omega.iter().map(|o| o.recip()).collect::<Vec<_>>());
    let xt = ginv.matmul(x)?.matmul(&oinv)?;
    let top_left = xt.shifted_from(z)?;
    let bottom_right = xt.adjoint().shifted_from(z.conj())?;
    let top_right = ginv.matmul(&ginv)?.scale(-w.conj());
    let bottom_left = oinv.matmul(&oinv)?.scale(w);
    determinant(&block2x2(&top_left, &top_right, &bottom_left, &bottom_right)?)
}

/// Which conjugation the `(4,3)` block of [`product2_d`] carries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VBlock {
    /// `−v̄`; reproduces the closed form `(1 + v̄w)^N (|z|² + vw̄)^N` at zero
    /// source.
    #[default]
    Conjugated,
    /// `−v`, kept for comparison.
    Plain,
}

/// The `4N` determinant linearizing `|det(z − X₁X₂)|²`:
///
/// ```text
/// | z    −w̄   0     X₁ |
/// | v    z̄    X₂†   0  |
/// | 0    X₁†  u     w  |
/// | X₂   0    −v̄    ū  |
/// ```
///
/// Scalars stand for multiples of the identity. At `(u, v, w) = (1, 0, 0)`
/// this is `det(z − X₁X₂) · conj(det(z − X₁X₂))`.
pub fn product2_d(
    z: C64,
    x1: &ComplexMatrix,
    x2: &ComplexMatrix,
    u: C64,
    v: C64,
    w: C64,
    v_block: VBlock,
) -> Result<C64> {
    let n = ensure_square("x1", x1)?;
    if ensure_square("x2", x2)? != n {
        return Err(Error::dimension("x1 and x2 must have the same size"));
    }
    let s = |c: C64| ComplexMatrix::scalar(n, c);
    let zero = ComplexMatrix::zeros(n, n);
    let v43 = match v_block {
        VBlock::Conjugated => -v.conj(),
        VBlock::Plain => -v,
    };
    let (zz, mw, vv, zc, uu, ww, m43, uc) = (
        s(z),
        s(-w.conj()),
        s(v),
        s(z.conj()),
        s(u),
        s(w),
        s(v43),
        s(u.conj()),
    );
    let (x1a, x2a) = (x1.adjoint(), x2.adjoint());
    let m = block_grid(&[
        &[&zz, &mw, &zero, x1],
        &[&vv, &zc, &x2a, &zero],
        &[&zero, &x1a, &uu, &ww],
        &[x2, &zero, &m43, &uc],
    ])?;
    determinant(&m)
}

/// The `2N` determinant `| z − X   −w̄ ; w   z̄ − X† |`.
///
/// Equal to `det((z − X)(z̄ − X†) + |w|²)`, hence real and nonnegative.
pub fn crossover_d(z: C64, x: &ComplexMatrix, w: C64) -> Result<C64> {
    let n = ensure_square("x", x)?;
    let top_left = x.shifted_from(z)?;
    let bottom_right = x.adjoint().shifted_from(z.conj())?;
    determinant(&block2x2(
        &top_left,
        &ComplexMatrix::scalar(n, -w.conj()),
        &ComplexMatrix::scalar(n, w),
        &bottom_right,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_c(rng: &mut ChaCha8Rng) -> C64 {
        c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |_, _| random_c(rng))
    }

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        let a = random_matrix(n, rng);
        (&a + &a.adjoint()).scale(c(0.5, 0.0))
    }

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    // Leibniz expansion, independent of the LU path.
    fn leibniz(m: &ComplexMatrix) -> C64 {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.n_rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
                (0..n).map(|i| m[(i, p[i])]).product::<C64>() * sign
            })
            .sum()
    }

    #[test]
    fn ratio_scalar_matrix() {
        let h = ComplexMatrix::zeros(3, 3);
        let r = ratio_d(c(2.0, 0.0), c(0.0, 1.0), &h).unwrap();
        assert!(close(r, c(0.0, 8.0), 1e-14));
        let h = ComplexMatrix::from_real_diag(&[0.4]);
        let (z, w) = (c(0.3, 0.2), c(-0.1, 0.7));
        assert!(close(ratio_d(z, w, &h).unwrap(), (z - 0.4) / (w - 0.4), 1e-14));
    }

    #[test]
    fn ratio_matches_eigenvalue_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = random_hermitian(3, &mut rng);
        let nh = nalgebra::DMatrix::from_fn(3, 3, |i, j| h[(i, j)]);
        let eig = nh.symmetric_eigen().eigenvalues;
        let (z, w) = (c(0.7, 0.1), c(0.5, 0.8));
        let oracle: C64 = eig.iter().map(|&l| (z - l) / (w - l)).product();
        assert!(close(ratio_d(z, w, &h).unwrap(), oracle, 1e-10));
    }

    #[test]
    fn ratio_singular_denominator() {
        let h = ComplexMatrix::from_real_diag(&[0.5, 1.0]);
        assert!(matches!(
            ratio_d(c(0.0, 0.0), c(0.5, 0.0), &h),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn keacp_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_matrix(2, &mut rng);
        let z = c(0.4, -0.6);
        let d = keacp_d(&[z], &ComplexMatrix::zeros(1, 1), &x).unwrap();
        let dz = x.shifted_from(z).unwrap().determinant().unwrap();
        assert!(close(d, c(dz.norm_sqr(), 0.0), 1e-12));

        let alpha = c(0.3, 0.9);
        let d = keacp_d(&[z], &ComplexMatrix::scalar(1, alpha), &ComplexMatrix::zeros(3, 3)).unwrap();
        let exact = (z.norm_sqr() + alpha.norm_sqr()).powi(3);
        assert!(close(d, c(exact, 0.0), 1e-12));

        let (z1, z2, xi) = (c(1.0, 0.5), c(-0.2, 0.3), c(0.1, -0.4));
        let d = keacp_d(&[z1, z2], &ComplexMatrix::zeros(2, 2), &ComplexMatrix::scalar(1, xi))
            .unwrap();
        let exact = (z1 - xi).norm_sqr() * (z2 - xi).norm_sqr();
        assert!(close(d, c(exact, 0.0), 1e-12));
    }

    #[test]
    fn keacp_dimension_mismatch() {
        let x = ComplexMatrix::zeros(2, 2);
        let err = keacp_d(&[c(1.0, 0.0)], &ComplexMatrix::zeros(2, 2), &x);
        assert!(matches!(err, Err(Error::Dimension(_))));
    }

    #[test]
    fn correlated_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_matrix(2, &mut rng);
        let (z, w) = (c(0.2, 0.7), c(-0.5, 0.3));
        let a = correlated_d(z, &x, &[1.0, 1.0], &[1.0, 1.0], w).unwrap();
        let b = keacp_d(&[z], &ComplexMatrix::scalar(1, w), &x).unwrap();
        assert!(close(a, b, 1e-12));

        let (x0, g, o) = (c(0.8, -0.3), 1.3, 0.6);
        let d = correlated_d(z, &ComplexMatrix::scalar(1, x0), &[g], &[o], w).unwrap();
        let exact = (z - x0 / (g * o)).norm_sqr() + w.norm_sqr() / (g * g * o * o);
        assert!(close(d, c(exact, 0.0), 1e-12));

        let (gs, os) = ([0.7, 1.9], [1.2, 0.4]);
        let d = correlated_d(z, &x, &gs, &os, c(0.0, 0.0)).unwrap();
        let xt = ComplexMatrix::from_fn(2, 2, |i, j| x[(i, j)] / (gs[i] * os[j]));
        let det = xt.shifted_from(z).unwrap().determinant().unwrap();
        assert!(close(d, c(det.norm_sqr(), 0.0), 1e-12));
    }

    #[test]
    fn correlated_rejects_nonpositive() {
        let x = ComplexMatrix::zeros(1, 1);
        let err = correlated_d(c(1.0, 0.0), &x, &[0.0], &[1.0], c(0.0, 0.0));
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn product2_reduces_to_product_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (x1, x2) = (random_matrix(2, &mut rng), random_matrix(2, &mut rng));
        let z = c(0.3, 0.4);
        let d = product2_d(z, &x1, &x2, c(1.0, 0.0), C64::default(), C64::default(), VBlock::default())
            .unwrap();
        let p = x1.matmul(&x2).unwrap().shifted_from(z).unwrap().determinant().unwrap();
        assert!(close(d, p * p.conj(), 1e-12));
    }

    #[test]
    fn product2_n1_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..5 {
            let [z, x1, x2, u, v, w] = std::array::from_fn(|_| random_c(&mut rng));
            let m = ComplexMatrix::new(
                4,
                4,
                vec![
                    z, -w.conj(), C64::default(), x1,
                    v, z.conj(), x2.conj(), C64::default(),
                    C64::default(), x1.conj(), u, w,
                    x2, C64::default(), -v.conj(), u.conj(),
                ],
            )
            .unwrap();
            let (a, b) = (ComplexMatrix::scalar(1, x1), ComplexMatrix::scalar(1, x2));
            let d = product2_d(z, &a, &b, u, v, w, VBlock::Conjugated).unwrap();
            assert!(close(d, leibniz(&m), 1e-12));
        }
    }

    #[test]
    fn product2_zero_source_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let n = 3;
        let zero = ComplexMatrix::zeros(n, n);
        for _ in 0..20 {
            let [z, v, w] = std::array::from_fn(|_| random_c(&mut rng));
            let d = product2_d(z, &zero, &zero, c(1.0, 0.0), v, w, VBlock::Conjugated).unwrap();
            let exact = (1.0 + v.conj() * w).powu(n as u32) * (z.norm_sqr() + v * w.conj()).powu(n as u32);
            assert!(close(d, exact, 1e-12));
        }
        // the plain sign gives something else off the real axis
        let (z, v, w) = (c(0.3, 0.1), c(0.2, 0.5), c(0.4, -0.3));
        let d = product2_d(z, &zero, &zero, c(1.0, 0.0), v, w, VBlock::Plain).unwrap();
        let exact = (1.0 + v.conj() * w).powu(3) * (z.norm_sqr() + v * w.conj()).powu(3);
        assert!(!close(d, exact, 1e-6));
    }

    #[test]
    fn crossover_examples() {
        let d = crossover_d(c(1.0, 1.0), &ComplexMatrix::zeros(3, 3), c(2.0, 0.0)).unwrap();
        assert!(close(d, c(216.0, 0.0), 1e-12));
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let x = random_matrix(2, &mut rng);
        let z = c(-0.3, 0.2);
        let d = crossover_d(z, &x, C64::default()).unwrap();
        let det = x.shifted_from(z).unwrap().determinant().unwrap();
        assert!(close(d, c(det.norm_sqr(), 0.0), 1e-12));
        // N = 1: |z − x|² + |w|²
        let (x0, w) = (c(0.6, -0.1), c(0.2, 0.9));
        let d = crossover_d(z, &ComplexMatrix::scalar(1, x0), w).unwrap();
        assert!(close(d, c((z - x0).norm_sqr() + w.norm_sqr(), 0.0), 1e-12));
    }

    #[test]
    fn phase_invariance_at_zero_source() {
        let (z, w) = (c(0.5, -0.2), c(0.7, 0.4));
        let x = ComplexMatrix::zeros(3, 3);
        let (g, o) = ([0.8, 1.1, 1.7], [1.4, 0.5, 0.9]);
        let c0 = crossover_d(z, &x, w).unwrap();
        let r0 = correlated_d(z, &x, &g, &o, w).unwrap();
        for k in 0..16 {
            let rot = C64::from_polar(1.0, k as f64 * std::f64::consts::PI / 8.0);
            assert!(close(crossover_d(z, &x, w * rot).unwrap(), c0, 1e-12));
            assert!(close(correlated_d(z, &x, &g, &o, w * rot).unwrap(), r0, 1e-12));
        }
    }

    proptest! {
        #[test]
        fn keacp_at_zero_deformation_is_nonnegative(seed in any::<u64>(), k in 1usize..3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_matrix(2, &mut rng);
            let zs: Vec<C64> = (0..k).map(|_| random_c(&mut rng)).collect();
            let d = keacp_d(&zs, &ComplexMatrix::zeros(k, k), &x).unwrap();
            prop_assert!(d.im.abs() <= 1e-12 * d.norm().max(1.0));
            prop_assert!(d.re >= -1e-12);
        }

        #[test]
        fn crossover_is_real_and_nonnegative(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_matrix(3, &mut rng);
            let (z, w) = (random_c(&mut rng), random_c(&mut rng));
            let d = crossover_d(z, &x, w).unwrap();
            prop_assert!(d.im.abs() <= 1e-10 * d.norm().max(1.0));
            prop_assert!(d.re >= -1e-12);
        }
    }
}
