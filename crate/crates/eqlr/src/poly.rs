//! Exact sparse multivariate polynomials over the integers in the three
//! variable families x_i, y_i, Y_i.
//!
//! Terms are kept in a BTreeMap keyed by the canonical monomial form
//! (family x < y < Y, then index, then exponent), so two polynomials are
//! equal iff their serialized forms are byte-identical. Coefficients are
//! arbitrary-precision integers. The y-family admits arbitrary integer
//! indices so that weight formulas on sub-tableaux (which may produce
//! nonpositive indices) stay total; the x and Y families use indices >= 1.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Variable family, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    X,
    Y,
    CapY,
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::CapY => "Y",
        }
    }
}

/// A single variable: family plus index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub family: Family,
    pub index: i32,
}

impl Var {
    pub fn x(i: i32) -> Var {
        debug_assert!(i >= 1);
        Var { family: Family::X, index: i }
    }
    pub fn y(i: i32) -> Var {
        Var { family: Family::Y, index: i }
    }
    pub fn cap_y(i: i32) -> Var {
        debug_assert!(i >= 1);
        Var { family: Family::CapY, index: i }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

/// A monomial: sorted list of (variable, positive exponent).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Total degree in the x-family.
    pub fn x_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.family == Family::X)
            .map(|&(_, e)| e)
            .sum()
    }

    /// Splits into (x-part, non-x part).
    pub fn split_x(&self) -> (Monomial, Monomial) {
        let (xs, rest): (Vec<_>, Vec<_>) =
            self.0.iter().partition(|(v, _)| v.family == Family::X);
        (Monomial(xs), Monomial(rest))
    }

    pub fn has_family(&self, fam: Family) -> bool {
        self.0.iter().any(|(v, _)| v.family == fam)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{}^{}", v, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial with integer coefficients; no stored zero terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(1)
    }

    pub fn constant(c: i64) -> MPoly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::one(), BigInt::from(c));
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> MPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigInt::one());
        MPoly { terms }
    }

    /// y_e - y_f. Equal indices give the zero polynomial.
    pub fn y_diff(e: i32, f: i32) -> MPoly {
        MPoly::var(Var::y(e)) - MPoly::var(Var::y(f))
    }

    /// Y_e - Y_f.
    pub fn cap_y_diff(e: i32, f: i32) -> MPoly {
        MPoly::var(Var::cap_y(e)) - MPoly::var(Var::cap_y(f))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.factors().iter().map(|&(_, e)| e).sum())
            .max()
    }

    pub fn has_family(&self, fam: Family) -> bool {
        self.terms.keys().any(|m| m.has_family(fam))
    }

    /// Replaces y_i by -Y_{n+1-i} for i <= n and by 0 for i > n.
    pub fn specialize_y_to_cap_y(&self, n: usize) -> Result<MPoly> {
        if self.has_family(Family::X) {
            return Err(Error::XVariablePresent);
        }
        let mut out = MPoly::zero();
        'term: for (m, c) in &self.terms {
            let mut mono = Monomial::one();
            let mut sign_flips = 0u32;
            for &(v, e) in m.factors() {
                match v.family {
                    Family::Y => {
                        let i = v.index;
                        if i < 1 {
                            return Err(Error::Internal(format!(
                                "cannot specialize nonpositive y-index y{}",
                                i
                            )));
                        }
                        if i as usize > n {
                            continue 'term; // y_i -> 0 kills the whole term
                        }
                        sign_flips += e;
                        mono = mono.mul(&Monomial(vec![(
                            Var::cap_y(n as i32 + 1 - i),
                            e,
                        )]));
                    }
                    Family::CapY => mono = mono.mul(&Monomial(vec![(v, e)])),
                    Family::X => unreachable!(),
                }
            }
            let coeff = if sign_flips % 2 == 0 { c.clone() } else { -c.clone() };
            out.insert_term(mono, coeff);
        }
        Ok(out)
    }

    /// The maximal x-monomial under (total x-degree, then lex with
    /// x1 > x2 > ...) together with its full non-x coefficient.
    pub fn x_leading_term(&self) -> Result<(Vec<u32>, MPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let max_index = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter())
            .filter(|(v, _)| v.family == Family::X)
            .map(|(v, _)| v.index as usize)
            .max()
            .unwrap_or(0);
        let exps = |m: &Monomial| -> Vec<u32> {
            let mut e = vec![0u32; max_index];
            for &(v, k) in m.factors() {
                if v.family == Family::X {
                    e[(v.index - 1) as usize] = k;
                }
            }
            e
        };
        let key = |e: &[u32]| -> (u32, Vec<u32>) { (e.iter().sum(), e.to_vec()) };
        let mut best: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            let e = exps(m);
            if best.as_ref().map_or(true, |b| key(&e) > key(b)) {
                best = Some(e);
            }
        }
        let best = best.unwrap();
        let mut coeff = MPoly::zero();
        for (m, c) in &self.terms {
            let (xpart, rest) = m.split_x();
            if exps(&xpart) == best {
                coeff.insert_term(rest, c.clone());
            }
        }
        // trim trailing zero exponents
        let mut best = best;
        while best.last() == Some(&0) {
            best.pop();
        }
        Ok((best, coeff))
    }

    /// Substitutes 0 for every y-variable.
    pub fn set_y_to_zero(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.factors().iter().any(|(v, _)| v.family == Family::Y) {
                continue;
            }
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    /// Swaps x_i and x_j everywhere.
    pub fn swap_x_vars(&self, i: i32, j: i32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mapped: Vec<(Var, u32)> = m
                .factors()
                .iter()
                .map(|&(v, e)| {
                    let v = if v.family == Family::X && v.index == i {
                        Var::x(j)
                    } else if v.family == Family::X && v.index == j {
                        Var::x(i)
                    } else {
                        v
                    };
                    (v, e)
                })
                .collect();
            let mut sorted = mapped;
            sorted.sort_by_key(|&(v, _)| v);
            out.insert_term(Monomial(sorted), c.clone());
        }
        out
    }

    /// Canonical text form, terms in descending monomial order,
    /// e.g. "y6+y4-y2-y1".
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            if abs.is_one() && !m.is_one() {
                s.push_str(&m.to_string());
            } else if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                s.push_str(&format!("{}*{}", abs, m));
            }
        }
        s
    }
}

impl Serialize for MPoly {
    /// JSON form: list of {"coeff": "...", "monomial": [[family, index, exp], ...]}
    /// in canonical (ascending) term order.
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coeff: String,
            monomial: Vec<(String, i32, u32)>,
        }
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let t = Term {
                coeff: c.to_string(),
                monomial: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| (v.family.prefix().to_string(), v.index, e))
                    .collect(),
            };
            seq.serialize_element(&t)?;
        }
        seq.end()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), -c.clone());
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        MPoly { terms }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = MPoly::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        (&self) * (&rhs)
    }
}

/// A square matrix of polynomials.
pub struct PolyMatrix {
    entries: Vec<Vec<MPoly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<MPoly>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::Internal("matrix is not square".into()));
        }
        Ok(PolyMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Determinant by cofactor expansion along the first column.
    pub fn determinant(&self) -> MPoly {
        fn det_rec(m: &[Vec<MPoly>], cols: &mut Vec<usize>, row: usize) -> MPoly {
            if cols.is_empty() {
                return MPoly::one();
            }
            let mut acc = MPoly::zero();
            for k in 0..cols.len() {
                let c = cols.remove(k);
                if !m[row][c].is_zero() {
                    let minor = det_rec(m, cols, row + 1);
                    let term = &m[row][c] * &minor;
                    if k % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                cols.insert(k, c);
            }
            acc
        }
        let n = self.dim();
        let mut cols: Vec<usize> = (0..n).collect();
        det_rec(&self.entries, &mut cols, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: i32) -> MPoly {
        MPoly::var(Var::y(i))
    }
    fn x(i: i32) -> MPoly {
        MPoly::var(Var::x(i))
    }

    #[test]
    fn telescoping_sum() {
        let lhs = MPoly::y_diff(6, 5) + MPoly::y_diff(5, 3);
        assert_eq!(lhs, MPoly::y_diff(6, 3));
        let paper = MPoly::y_diff(6, 5)
            + MPoly::y_diff(5, 3)
            + MPoly::y_diff(4, 2)
            + MPoly::y_diff(3, 1);
        let rhs = MPoly::y_diff(6, 1) + MPoly::y_diff(4, 2);
        assert_eq!(paper, rhs);
    }

    #[test]
    fn mul_by_zero() {
        let p = y(3) * (x(1) + MPoly::constant(7));
        assert!((&p * &MPoly::zero()).is_zero());
    }

    #[test]
    fn render_canonical() {
        let p = MPoly::y_diff(6, 1) + MPoly::y_diff(4, 2);
        assert_eq!(p.render(), "y6+y4-y2-y1");
        assert_eq!(MPoly::zero().render(), "0");
        assert_eq!(MPoly::constant(-3).render(), "-3");
    }

    #[test]
    fn determinant_small() {
        let id = PolyMatrix::new(vec![
            vec![MPoly::one(), MPoly::zero(), MPoly::zero()],
            vec![MPoly::zero(), MPoly::one(), MPoly::zero()],
            vec![MPoly::zero(), MPoly::zero(), MPoly::one()],
        ])
        .unwrap();
        assert_eq!(id.determinant(), MPoly::one());

        let equal_rows = PolyMatrix::new(vec![
            vec![x(1), y(2)],
            vec![x(1), y(2)],
        ])
        .unwrap();
        assert!(equal_rows.determinant().is_zero());

        // [[x1, x2], [1, 1]] -> x1 - x2
        let m = PolyMatrix::new(vec![vec![x(1), x(2)], vec![MPoly::one(), MPoly::one()]]).unwrap();
        assert_eq!(m.determinant(), x(1) - x(2));
    }

    #[test]
    fn determinant_row_swap_antisymmetry() {
        // pseudo-random 3x3 entries built from small polynomials
        let gen = |seed: i32| -> MPoly {
            let a = (seed * 7 + 3) % 5 - 2;
            let b = (seed * 13 + 1) % 4;
            x((seed.rem_euclid(3)) + 1) + y(b + 1) * MPoly::constant(a as i64)
        };
        for s in 0..5 {
            let rows: Vec<Vec<MPoly>> = (0..3)
                .map(|i| (0..3).map(|j| gen(s * 9 + i * 3 + j)).collect())
                .collect();
            let d0 = PolyMatrix::new(rows.clone()).unwrap().determinant();
            for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
                let mut swapped = rows.clone();
                swapped.swap(i, j);
                let d1 = PolyMatrix::new(swapped).unwrap().determinant();
                assert_eq!(d0.clone() + d1, MPoly::zero());
            }
        }
    }

    #[test]
    fn specialize_examples() {
        let p = MPoly::y_diff(6, 1);
        assert_eq!(p.specialize_y_to_cap_y(6).unwrap(), MPoly::cap_y_diff(6, 1));

        // y_e - y_f -> Y_{n+1-f} - Y_{n+1-e}
        for n in 6..9usize {
            let (e, f) = (5, 2);
            let p = MPoly::y_diff(e, f);
            let want = MPoly::cap_y_diff(n as i32 + 1 - f, n as i32 + 1 - e);
            assert_eq!(p.specialize_y_to_cap_y(n).unwrap(), want);
        }

        // index beyond n vanishes
        let p = y(7);
        assert!(p.specialize_y_to_cap_y(6).unwrap().is_zero());

        // x present -> error
        assert!(x(1).specialize_y_to_cap_y(3).is_err());
    }

    #[test]
    fn specialize_is_ring_hom() {
        let p = MPoly::y_diff(3, 1) + y(2) * y(4);
        let q = y(1) * y(1) - MPoly::constant(2) * y(5);
        let n = 5;
        assert_eq!(
            (p.clone() + q.clone()).specialize_y_to_cap_y(n).unwrap(),
            p.specialize_y_to_cap_y(n).unwrap() + q.specialize_y_to_cap_y(n).unwrap()
        );
        assert_eq!(
            (&p * &q).specialize_y_to_cap_y(n).unwrap(),
            &p.specialize_y_to_cap_y(n).unwrap() * &q.specialize_y_to_cap_y(n).unwrap()
        );
    }

    #[test]
    fn leading_term_examples() {
        // x1^2 x2 + x1 x2^2 -> (2,1)
        let p = x(1) * x(1) * x(2) + x(1) * x(2) * x(2);
        let (e, c) = p.x_leading_term().unwrap();
        assert_eq!(e, vec![2, 1]);
        assert_eq!(c, MPoly::one());

        // x1 (y1+y2) + 1 -> (1) with coefficient y1+y2
        let p = x(1) * (y(1) + y(2)) + MPoly::one();
        let (e, c) = p.x_leading_term().unwrap();
        assert_eq!(e, vec![1]);
        assert_eq!(c, y(1) + y(2));

        assert!(MPoly::zero().x_leading_term().is_err());
    }

    #[test]
    fn leading_term_of_symmetric_is_weakly_decreasing() {
        // symmetrize a few monomial seeds over x1..x3 and check the head
        let seeds = [vec![2u32, 1, 0], vec![3, 0, 0], vec![2, 2, 1], vec![1, 1, 1]];
        for s in &seeds {
            let mut p = MPoly::zero();
            let mut perms = vec![s.clone()];
            // all permutations of 3 entries
            let idx = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            for pi in idx {
                perms.push(vec![s[pi[0]], s[pi[1]], s[pi[2]]]);
            }
            perms.sort();
            perms.dedup();
            for e in perms {
                let mut term = MPoly::one();
                for (i, &k) in e.iter().enumerate() {
                    for _ in 0..k {
                        term = term * x(i as i32 + 1);
                    }
                }
                p += &term;
            }
            let (head, _) = p.x_leading_term().unwrap();
            let mut padded = head.clone();
            padded.resize(3, 0);
            assert!(padded.windows(2).all(|w| w[0] >= w[1]), "head {:?}", head);
        }
    }
}
