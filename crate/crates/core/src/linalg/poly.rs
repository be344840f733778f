//! Univariate polynomials over the rationals, just enough to find the
//! rational eigenvalues of an endomorphism.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Mat, Rational};

/// Coefficients stored lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

/// Integer coefficients above this bound are not factored when searching for
/// rational roots.
const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn one() -> Self {
        Poly(vec![Rational::one()])
    }

    /// `t - root`
    pub fn linear(root: &Rational) -> Self {
        Poly(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    /// Quotient and remainder of polynomial division.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.0.len() - 1;
        let lead = divisor.0.last().unwrap();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.0.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots in increasing order.
    ///
    /// Uses the rational root theorem on a primitive integer multiple of the
    /// square-free part. When a coefficient is too large to factor, only the
    /// roots that can be certified cheaply (zero) are returned.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        let mut p = self.squarefree_part();
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.0[0].is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&Poly::linear(&Rational::zero())).0;
        }
        if p.degree().unwrap_or(0) > 0 {
            let ints = p.integer_coefficients();
            let (c0, cn) = (ints[0].abs(), ints.last().unwrap().abs());
            if let (Some(d0), Some(dn)) = (small_divisors(&c0), small_divisors(&cn)) {
                for num in &d0 {
                    for den in &dn {
                        for sign in [-1i64, 1] {
                            let cand = Rational::new(BigInt::from(sign) * num, den.clone());
                            if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Primitive integer polynomial proportional to `self`.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.into_iter().map(|c| c / &content).collect()
        }
    }

    /// Characteristic polynomial `det(t·I − m)` via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(m: &Mat) -> Poly {
        assert!(
            m.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = m.rows();
        let mut h: Vec<Vec<Rational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
        for col in 0..n.saturating_sub(2) {
            let piv_row = col + 1;
            let Some(i) = (piv_row..n).find(|&i| !h[i][col].is_zero()) else {
                continue;
            };
            if i != piv_row {
                h.swap(i, piv_row);
                for row in h.iter_mut() {
                    row.swap(i, piv_row);
                }
            }
            for i in piv_row + 1..n {
                if h[i][col].is_zero() {
                    continue;
                }
                let u = &h[i][col] / &h[piv_row][col];
                for k in 0..n {
                    let delta = &u * &h[piv_row][k];
                    h[i][k] -= delta;
                }
                for row in h.iter_mut() {
                    let delta = &u * &row[i];
                    row[piv_row] += delta;
                }
            }
        }
        // p_k = (t − h_kk) p_{k−1} − Σ_{i<k} h_ik (∏_{j=i+1}^{k} h_{j,j−1}) p_{i−1}
        let mut ps: Vec<Poly> = vec![Poly::one()];
        for k in 0..n {
            let mut pk = Poly::linear(&h[k][k]).mul(&ps[k]);
            let mut prod = Rational::one();
            for i in (0..k).rev() {
                prod *= &h[i + 1][i];
                if prod.is_zero() {
                    break;
                }
                let c = &h[i][k] * &prod;
                if c.is_zero() {
                    continue;
                }
                let term = Poly(ps[i].0.iter().map(|x| x * &c).collect());
                pk = pk.sub(&term);
            }
            ps.push(pk);
        }
        ps.pop().unwrap()
    }

    fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

/// All positive divisors of `n`, or `None` when `n` is too large to factor by
/// trial division.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 || n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qf};

    /// Determinant by elimination: the independent oracle for `charpoly`.
    fn det(m: &Mat) -> Rational {
        let n = m.rows();
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
        let mut d = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                d = -d;
            }
            d *= &a[c][c];
            for r in c + 1..n {
                let f = &a[r][c] / &a[c][c];
                for k in c..n {
                    let delta = &f * &a[c][k];
                    a[r][k] -= delta;
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant_oracle() {
        let m = Mat::from_i64(&[&[2, -1, 0, 3], &[1, 0, 4, 1], &[0, 2, -3, 1], &[5, 1, 1, 0]]);
        let p = Poly::charpoly(&m);
        assert_eq!(p.degree(), Some(4));
        for t in -3..=3 {
            let shifted = &Mat::identity(4).scale(&q(t)) - &m;
            assert_eq!(p.eval(&q(t)), det(&shifted), "t = {t}");
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        // (t - 1/2)^2 (t + 3) (t^2 - 2)
        let p = Poly::linear(&qf(1, 2))
            .mul(&Poly::linear(&qf(1, 2)))
            .mul(&Poly::linear(&q(-3)))
            .mul(&Poly::new(vec![q(-2), q(0), q(1)]));
        assert_eq!(p.rational_roots(), vec![q(-3), qf(1, 2)]);
        assert_eq!(p.squarefree_part().degree(), Some(4));
    }

    #[test]
    fn nilpotent_has_only_zero() {
        let n = Mat::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let p = Poly::charpoly(&n);
        assert_eq!(p, Poly::new(vec![q(0), q(0), q(0), q(1)]));
        assert_eq!(p.rational_roots(), vec![q(0)]);
    }
}
