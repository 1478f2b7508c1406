//! Root and weight lattice arithmetic for the twisted affine algebra A(2)_2n.
//!
//! A weight below the fixed highest weight `Λ = a₀Λ₀ + … + aₙΛₙ` is stored as
//! its *content*: the coefficient vector `c` of `α = Σ cᵢαᵢ` with `λ = Λ − α`.
//! Everything else (hub, defect, degree, the `{Λᵢ, δ}` coordinates) is derived
//! from the content on demand. All arithmetic is exact.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational used for symmetrizer entries, bilinear forms and defects.
pub type Rational = Rational64;

/// Coefficients of `α` in the simple roots, for `λ = Λ − α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightContent(pub Vec<i64>);

impl WeightContent {
    pub fn zero(n: usize) -> Self {
        WeightContent(vec![0; n + 1])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// `self + k·eᵢ`.
    pub fn shifted(&self, i: usize, k: i64) -> Self {
        let mut c = self.0.clone();
        c[i] += k;
        WeightContent(c)
    }
}

impl fmt::Display for WeightContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `[⟨h₀,λ⟩, …, ⟨hₙ,λ⟩]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hub(pub Vec<i64>);

impl Hub {
    pub fn theta(&self, i: usize) -> i64 {
        self.0[i]
    }
}

impl fmt::Display for Hub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A weight in the `{Λ₀, …, Λₙ, δ_d}` coordinates.
///
/// `delta_coeff` is the pairing `⟨d, λ⟩` with the scaling element, so a
/// content `c` contributes `−c₀`. The null root `δ = 2α₀ + … + 2αₙ₋₁ + αₙ`
/// pairs to 2 with `d` and therefore has `delta_coeff = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FullWeight {
    pub lambda_coeffs: Vec<Rational>,
    pub delta_coeff: Rational,
}

/// Renders a hub/defect pair the way vertex labels are written: `[2,0]^3/2`.
pub fn vertex_label(hub: &Hub, defect: Rational) -> String {
    format!("{hub}^{defect}")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanContext {
    n: usize,
    h: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    highest_weight: Vec<i64>,
}

/// The Cartan matrix of A(2)_2n.
///
/// For `n ≥ 2` the row pattern is `(2,−2)` on top, `(−1,2,−1)` in the
/// middle, `(−1,2,−2)` on the second-to-last row and `(−1,2)` at the bottom,
/// which is the unique tridiagonal choice making `D·A` symmetric.
pub fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    assert!(n >= 1);
    let size = n + 1;
    let mut a = vec![vec![0i64; size]; size];
    if n == 1 {
        a[0] = vec![2, -4];
        a[1] = vec![-1, 2];
        return a;
    }
    for i in 0..size {
        a[i][i] = 2;
        if i > 0 {
            a[i][i - 1] = -1;
        }
        if i + 1 < size {
            a[i][i + 1] = -1;
        }
    }
    a[0][1] = -2;
    a[n - 1][n] = -2;
    a
}

/// `D = diag(1/2, 1, …, 1, 2)`.
pub fn symmetrizer(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|i| {
            if i == 0 {
                Rational::new(1, 2)
            } else if i == n {
                Rational::from_integer(2)
            } else {
                Rational::one()
            }
        })
        .collect()
}

impl CartanContext {
    pub fn new(n: usize, highest_weight: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        if highest_weight.len() != n + 1 {
            return Err(Error::WeightLength {
                expected: n + 1,
                got: highest_weight.len(),
            });
        }
        if let Some((index, &value)) = highest_weight.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeCoefficient { index, value });
        }
        if highest_weight.iter().all(|&v| v == 0) {
            return Err(Error::ZeroWeight);
        }
        Ok(CartanContext {
            n,
            h: 2 * n + 1,
            cartan: cartan_matrix(n),
            symmetrizer: symmetrizer(n),
            highest_weight: highest_weight.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The odd modulus `h = 2n + 1`.
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn rank(&self) -> usize {
        self.n + 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.highest_weight
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.n {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_content(&self, c: &WeightContent) -> Result<()> {
        if c.0.len() != self.rank() {
            return Err(Error::ContentLength {
                expected: self.rank(),
                got: c.0.len(),
            });
        }
        if !c.is_nonnegative() {
            return Err(Error::NegativeContent(c.0.clone()));
        }
        Ok(())
    }

    /// `(αᵢ | αⱼ) = dᵢ aᵢⱼ`.
    pub fn gram(&self, i: usize, j: usize) -> Result<Rational> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.gram_unchecked(i, j))
    }

    fn gram_unchecked(&self, i: usize, j: usize) -> Rational {
        self.symmetrizer[i] * self.cartan[i][j]
    }

    /// `(x | y)` for two vectors in the simple-root basis.
    pub fn root_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                total += *xi * *yj * self.gram_unchecked(i, j);
            }
        }
        total
    }

    /// `r = a₀ + 2a₁ + … + 2aₙ`.
    pub fn level(&self) -> i64 {
        self.highest_weight[0] + 2 * self.highest_weight[1..].iter().sum::<i64>()
    }

    /// Coefficients of the null root `δ` in the simple roots: `(2, …, 2, 1)`.
    pub fn null_root(&self) -> WeightContent {
        let mut c = vec![2; self.rank()];
        c[self.n] = 1;
        WeightContent(c)
    }

    pub fn degree(&self, c: &WeightContent) -> i64 {
        c.degree()
    }

    /// `θᵢ = aᵢ − Σⱼ aᵢⱼ cⱼ`.
    pub fn hub(&self, c: &WeightContent) -> Hub {
        Hub((0..self.rank()).map(|i| self.theta(c, i)).collect())
    }

    pub fn theta(&self, c: &WeightContent, i: usize) -> i64 {
        self.highest_weight[i]
            - self.cartan[i]
                .iter()
                .zip(&c.0)
                .map(|(a, x)| a * x)
                .sum::<i64>()
    }

    /// `defect(Λ − α) = (Λ|α) − ½(α|α)` with `(Λ|αᵢ) = dᵢ aᵢ`.
    pub fn defect(&self, c: &WeightContent) -> Rational {
        let lambda_alpha: Rational = (0..self.rank())
            .map(|i| self.symmetrizer[i] * self.highest_weight[i] * c.0[i])
            .sum();
        let alpha: Vec<Rational> = c.0.iter().map(|&x| Rational::from_integer(x)).collect();
        lambda_alpha - self.root_form(&alpha, &alpha) / 2
    }

    /// Defect of `λ − tδ`, i.e. `defect(λ) + t·r`.
    pub fn defect_shift(&self, c: &WeightContent, t: i64) -> Rational {
        self.defect(c) + Rational::from_integer(t * self.level())
    }

    /// Simple reflection `sᵢ(λ) = λ − θᵢ αᵢ`, i.e. `c ↦ c + θᵢ eᵢ`.
    pub fn reflect(&self, c: &WeightContent, i: usize) -> Result<WeightContent> {
        self.check_index(i)?;
        let image = c.shifted(i, self.theta(c, i));
        if image.0[i] < 0 {
            return Err(Error::LeavesCone {
                residue: i,
                from: c.0.clone(),
            });
        }
        Ok(image)
    }

    /// Change of basis: `αⱼ = Σᵢ aᵢⱼ Λᵢ + [j = 0]·δ_d`.
    pub fn weight_in_basis(&self, c: &WeightContent) -> FullWeight {
        FullWeight {
            lambda_coeffs: self
                .hub(c)
                .0
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
            delta_coeff: Rational::from_integer(-c.0[0]),
        }
    }

    /// Inverse of [`weight_in_basis`](Self::weight_in_basis). Returns `None`
    /// when the weight is not `Λ` minus an integral combination of simple roots.
    pub fn content_of(&self, w: &FullWeight) -> Option<WeightContent> {
        if w.lambda_coeffs.len() != self.rank() || !w.delta_coeff.is_integer() {
            return None;
        }
        // (A c)ᵢ = aᵢ − λᵢ; A is tridiagonal with nonzero superdiagonal, so
        // row i determines c_{i+1} from c_{i−1} and cᵢ.
        let rhs: Vec<Rational> = (0..self.rank())
            .map(|i| Rational::from_integer(self.highest_weight[i]) - w.lambda_coeffs[i])
            .collect();
        let mut c = vec![Rational::zero(); self.rank()];
        c[0] = -w.delta_coeff;
        for i in 0..self.n {
            let mut acc = rhs[i] - c[i] * self.cartan[i][i];
            if i > 0 {
                acc -= c[i - 1] * self.cartan[i][i - 1];
            }
            c[i + 1] = acc / self.cartan[i][i + 1];
        }
        let last = self.n;
        let check = c[last - 1] * self.cartan[last][last - 1] + c[last] * self.cartan[last][last];
        if check != rhs[last] || c.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(WeightContent(c.iter().map(|x| x.to_integer()).collect()))
    }

    /// Translation `t_α(ζ) = ζ + rα − ((ζ|α) + ½(α|α)r)δ`.
    ///
    /// `alpha` holds coefficients on `α₁, …, αₙ`. The pairing uses
    /// `(Λⱼ|αᵢ) = dᵢ δᵢⱼ` and `(δ|αᵢ) = 0`; `δ` is the null root, which
    /// contributes 2 to `delta_coeff` per unit.
    pub fn translate(&self, zeta: &FullWeight, alpha: &[Rational], r: i64) -> FullWeight {
        assert_eq!(alpha.len(), self.n, "translation vector lives on α₁..αₙ");
        let mut full_alpha = vec![Rational::zero()];
        full_alpha.extend_from_slice(alpha);

        let mut lambda = zeta.lambda_coeffs.clone();
        for (i, coeff) in lambda.iter_mut().enumerate() {
            for (j, aj) in full_alpha.iter().enumerate().skip(1) {
                *coeff += *aj * r * self.cartan[i][j];
            }
        }
        let zeta_alpha: Rational = (1..self.rank())
            .map(|i| zeta.lambda_coeffs[i] * self.symmetrizer[i] * full_alpha[i])
            .sum();
        let alpha_alpha = self.root_form(&full_alpha, &full_alpha);
        let shift = zeta_alpha + alpha_alpha * r / 2;
        FullWeight {
            lambda_coeffs: lambda,
            delta_coeff: zeta.delta_coeff - shift * 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn wc(v: &[i64]) -> WeightContent {
        WeightContent(v.to_vec())
    }

    #[test]
    fn cartan_small_cases() {
        let ctx = CartanContext::new(1, &[0, 1]).unwrap();
        assert_eq!(ctx.cartan(), &[vec![2, -4], vec![-1, 2]]);
        assert_eq!(ctx.symmetrizer(), &[q(1, 2), q(2, 1)]);
        let ctx = CartanContext::new(2, &[1, 2, 1]).unwrap();
        assert_eq!(
            ctx.cartan(),
            &[vec![2, -2, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(ctx.h(), 5);
    }

    #[test]
    fn rejects_bad_weights() {
        assert_eq!(CartanContext::new(1, &[0, 0]), Err(Error::ZeroWeight));
        assert!(matches!(
            CartanContext::new(1, &[1, -1]),
            Err(Error::NegativeCoefficient {
                index: 1,
                value: -1
            })
        ));
        assert!(matches!(
            CartanContext::new(2, &[1, 1]),
            Err(Error::WeightLength { .. })
        ));
        assert_eq!(CartanContext::new(0, &[1]), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn matrix_identities_up_to_rank_eight() {
        for n in 1..=8 {
            let a = cartan_matrix(n);
            let d = symmetrizer(n);
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "n={n} ({i},{j})");
                }
                let mut null = vec![2i64; n + 1];
                null[n] = 1;
                let col: i64 = (0..=n).map(|j| a[i][j] * null[j]).sum();
                assert_eq!(col, 0);
                let mut central = vec![2i64; n + 1];
                central[0] = 1;
                let row: i64 = (0..=n).map(|k| central[k] * a[k][i]).sum();
                assert_eq!(row, 0);
            }
        }
    }

    #[test]
    fn gram_values() {
        let ctx = CartanContext::new(3, &[1, 0, 0, 0]).unwrap();
        assert_eq!(ctx.gram(0, 0).unwrap(), q(1, 1));
        assert_eq!(ctx.gram(0, 1).unwrap(), q(-1, 1));
        assert_eq!(ctx.gram(2, 3).unwrap(), q(-2, 1));
        assert_eq!(ctx.gram(3, 3).unwrap(), q(4, 1));
        assert!(matches!(ctx.gram(4, 0), Err(Error::IndexOutOfRange { .. })));
        let ctx = CartanContext::new(1, &[0, 1]).unwrap();
        assert_eq!(ctx.gram(0, 1).unwrap(), q(-2, 1));
        assert_eq!(ctx.gram(1, 0).unwrap(), q(-2, 1));
    }

    #[test]
    fn hub_defect_level_degree() {
        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        assert_eq!(l1.hub(&wc(&[4, 1])), Hub(vec![-4, 3]));
        assert_eq!(l1.hub(&wc(&[0, 0])), Hub(vec![0, 1]));
        assert_eq!(l1.defect(&wc(&[1, 1])), q(3, 2));
        assert_eq!(l1.defect(&wc(&[0, 0])), q(0, 1));
        assert_eq!(l1.level(), 2);
        assert_eq!(l1.degree(&wc(&[4, 1])), 5);

        let big = CartanContext::new(2, &[1, 2, 1]).unwrap();
        assert_eq!(big.hub(&wc(&[0, 1, 1])), Hub(vec![3, 2, 0]));
        assert_eq!(big.hub(&wc(&[2, 2, 0])), Hub(vec![1, 0, 3]));
        assert_eq!(big.defect(&wc(&[2, 2, 0])), q(3, 1));
        assert_eq!(big.defect(&wc(&[0, 1, 1])), q(3, 1));
        assert_eq!(big.level(), 7);
        assert_eq!(CartanContext::new(3, &[1, 0, 0, 0]).unwrap().level(), 1);
    }

    #[test]
    fn defect_shift_matches_direct_evaluation() {
        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        assert_eq!(l1.defect_shift(&wc(&[0, 1]), 1), q(2, 1));
        assert_eq!(l1.defect(&wc(&[2, 2])), q(2, 1));
        assert_eq!(l1.defect_shift(&wc(&[1, 1]), 0), l1.defect(&wc(&[1, 1])));
        let big = CartanContext::new(2, &[1, 2, 1]).unwrap();
        assert_eq!(big.defect_shift(&wc(&[0, 0, 0]), 1), q(7, 1));
        assert_eq!(big.defect(&wc(&[2, 2, 1])), q(7, 1));
    }

    #[test]
    fn reflections() {
        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        assert_eq!(l1.reflect(&wc(&[0, 1]), 0).unwrap(), wc(&[4, 1]));
        assert_eq!(l1.reflect(&wc(&[2, 1]), 0).unwrap(), wc(&[2, 1]));
        assert_eq!(l1.reflect(&wc(&[4, 1]), 0).unwrap(), wc(&[0, 1]));
        assert_eq!(l1.reflect(&wc(&[0, 1]), 1).unwrap(), wc(&[0, 0]));
        assert!(matches!(
            l1.reflect(&wc(&[0, 2]), 1),
            Err(Error::LeavesCone { residue: 1, .. })
        ));
    }

    #[test]
    fn basis_change() {
        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        let w = l1.weight_in_basis(&wc(&[4, 1]));
        assert_eq!(w.lambda_coeffs, vec![q(-4, 1), q(3, 1)]);
        assert_eq!(w.delta_coeff, q(-4, 1));
        let w = l1.weight_in_basis(&wc(&[2, 1]));
        assert_eq!(w.lambda_coeffs, vec![q(0, 1), q(1, 1)]);
        assert_eq!(w.delta_coeff, q(-2, 1));
        let w = l1.weight_in_basis(&wc(&[0, 0]));
        assert_eq!(w.delta_coeff, q(0, 1));
        assert_eq!(
            l1.content_of(&l1.weight_in_basis(&wc(&[7, 3]))),
            Some(wc(&[7, 3]))
        );
    }

    #[test]
    fn translation_of_highest_weight() {
        let l1 = CartanContext::new(1, &[0, 1]).unwrap();
        let zeta = l1.weight_in_basis(&wc(&[0, 0]));
        let image = l1.translate(&zeta, &[q(1, 2)], l1.level());
        assert_eq!(image.lambda_coeffs, vec![q(-4, 1), q(3, 1)]);
        let content = l1.content_of(&image).unwrap();
        assert_eq!(content, wc(&[4, 1]));
        assert_eq!(l1.defect(&content), q(0, 1));
        assert_eq!(l1.translate(&zeta, &[q(0, 1)], 2), zeta);
    }
}
