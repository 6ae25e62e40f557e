//! Factorial Schur functions, alternants, the bialternant identity, the
//! product-expansion oracle, and executable forms of the summation lemmas.
//!
//! The oracle is the route that never looks at a tableau weight: it
//! multiplies two factorial Schur functions as raw polynomials and strips
//! leading terms greedily. Under the order (total x-degree, then lex with
//! x1 > x2 > ...) the head of a symmetric polynomial is a partition
//! exponent and s_α(x|y) has head x^α with coefficient 1, so elimination
//! terminates with the unique coefficient table.

use crate::error::{Error, Result};
use crate::partition::{primed, Composition, Partition};
use crate::poly::{MPoly, PolyMatrix, Var};
use crate::tableaux::{
    bar_patterns_over, enumerate_barred_tableaux, enumerate_reverse_tableaux, ReverseBarredTableau,
    ReverseDiagram,
};
use crate::weights::{weight_c_xi_b, CoefficientTable};
use std::collections::BTreeMap;

/// (x_j | y)^k = (x_j - y_1)(x_j - y_2)...(x_j - y_k).
pub fn falling_product(j: usize, k: i64) -> MPoly {
    let mut p = MPoly::one();
    let x = MPoly::var(Var::x(j as i32));
    for t in 1..=k {
        p = p * (x.clone() - MPoly::var(Var::y(t as i32)));
    }
    p
}

/// (x|y)^R for a reverse (sub)tableau: the product over filled cells of
/// x_{value} - y_{value' + c - r}.
pub fn box_product(r_sub: &ReverseBarredTableau) -> MPoly {
    let d = r_sub.d;
    let mut p = MPoly::one();
    for ((r, c), e) in r_sub.entries() {
        debug_assert!(!e.barred);
        let f = primed(e.value, d) as i64 + c as i64 - r as i64;
        p = p * (MPoly::var(Var::x(e.value as i32)) - MPoly::var(Var::y(f as i32)));
    }
    p
}

/// (x|y)^ξ = (x_1|y)^{ξ_1} ... (x_d|y)^{ξ_d}.
pub fn xi_product(xi: &Composition) -> MPoly {
    let mut p = MPoly::one();
    for j in 1..=xi.len() {
        p = p * falling_product(j, xi.entry(j));
    }
    p
}

/// The factorial Schur function s_{μ/κ}(x|y) = Σ_{R} (x|y)^R.
pub fn factorial_schur(diagram: &ReverseDiagram, d: usize) -> MPoly {
    let mut p = MPoly::zero();
    for r in enumerate_reverse_tableaux(diagram, d) {
        p += &box_product(&r);
    }
    p
}

/// a_ξ(x|y) = det[(x_j|y)^{ξ_i}].
pub fn alternant(xi: &Composition, d: usize) -> MPoly {
    let rows: Vec<Vec<MPoly>> = (1..=d)
        .map(|i| (1..=d).map(|j| falling_product(j, xi.entry(i))).collect())
        .collect();
    PolyMatrix::new(rows).expect("square").determinant()
}

/// a_{ξ} for ξ = μ + ρ.
pub fn alternant_mu_rho(mu: &Partition, d: usize) -> MPoly {
    let rho = Partition::staircase(d);
    let xi = Composition::new(
        (1..=d)
            .map(|i| mu.part(i) as i64 + rho.part(i) as i64)
            .collect(),
    );
    alternant(&xi, d)
}

/// Division-free bialternant identity: a_ρ(x|y) · s_μ(x|y) == a_{μ+ρ}(x|y).
pub fn verify_bialternant(mu: &Partition, d: usize) -> bool {
    let diagram = ReverseDiagram::new(mu.clone());
    let lhs = &alternant_mu_rho(&Partition::zero(d), d) * &factorial_schur(&diagram, d);
    let rhs = alternant_mu_rho(mu, d);
    lhs == rhs
}

/// Expands s_λ · s_{μ/κ} in the factorial Schur basis by greedy leading-term
/// elimination. Independent of every tableau weight.
pub fn expand_product_oracle(
    lambda: &Partition,
    diagram: &ReverseDiagram,
    d: usize,
) -> Result<CoefficientTable> {
    let s_lambda = factorial_schur(&ReverseDiagram::new(lambda.clone()), d);
    let s_mu = factorial_schur(diagram, d);
    let mut remainder = &s_lambda * &s_mu;
    let mut entries = BTreeMap::new();
    let mut schur_cache: BTreeMap<Partition, MPoly> = BTreeMap::new();
    while !remainder.is_zero() {
        let (head, coeff) = remainder.x_leading_term()?;
        if head.windows(2).any(|w| w[0] < w[1]) || head.len() > d {
            return Err(Error::Internal(format!(
                "leading exponent {:?} is not a partition in {} variables",
                head, d
            )));
        }
        let alpha = Partition::with_length(head, d)?;
        let s_alpha = schur_cache
            .entry(alpha.clone())
            .or_insert_with(|| factorial_schur(&ReverseDiagram::new(alpha.clone()), d))
            .clone();
        remainder -= &(&coeff * &s_alpha);
        if entries.insert(alpha.clone(), coeff).is_some() {
            return Err(Error::Internal(format!(
                "leading exponent {:?} eliminated twice",
                alpha
            )));
        }
    }
    Ok(CoefficientTable {
        entries,
        factored: BTreeMap::new(),
    })
}

/// Lemma of the product with an alternant:
/// a_{λ+ρ} s_{μ/κ} == Σ_{B ∈ B(μ/κ)} c_{λ*B} a_{λ+ρ+ω(B^u)}.
pub fn verify_lemma_product_alternant(
    lambda: &Partition,
    diagram: &ReverseDiagram,
    d: usize,
) -> bool {
    let lhs = &alternant_mu_rho(lambda, d) * &factorial_schur(diagram, d);
    let rho = Partition::staircase(d);
    let xi_base = Composition::new(
        (1..=d)
            .map(|i| lambda.part(i) as i64 + rho.part(i) as i64)
            .collect(),
    );
    let shift = crate::weights::lambda_rho_one(lambda, d);
    let mut rhs = MPoly::zero();
    for b in enumerate_barred_tableaux(diagram, d) {
        let weight = weight_c_xi_b(&shift, &b);
        if weight.is_zero() {
            continue;
        }
        let omega = crate::partition::content(&b.unbarred_word(), d).expect("range");
        let idx = xi_base.add(&omega);
        rhs += &(&weight * &alternant(&idx, d));
    }
    lhs == rhs
}

/// Induction identity on subtableaux:
/// (x|y)^ξ (x|y)^R == Σ_{B ∈ B_sub, B~ = R} c_{ξ+1,B} (x|y)^{ξ+ω(B^u)}.
pub fn verify_lemma_induction(r_sub: &ReverseBarredTableau, xi: &Composition) -> bool {
    let d = r_sub.d;
    let lhs = &xi_product(xi) * &box_product(r_sub);
    let xi_plus_one = Composition::new((1..=d).map(|i| xi.entry(i) + 1).collect());
    let mut rhs = MPoly::zero();
    for b in bar_patterns_over(r_sub) {
        let weight = weight_c_xi_b(&xi_plus_one, &b);
        if weight.is_zero() {
            continue;
        }
        let omega = crate::partition::content(&b.unbarred_word(), d).expect("range");
        rhs += &(&weight * &xi_product(&xi.add(&omega)));
    }
    lhs == rhs
}

/// Direct summation form of the cancellation lemma: the Bad-Guy part of the
/// hatted expansion sums to zero. The pairing proof lives in the involution
/// module; this is the blunt polynomial check.
pub fn verify_bad_guys_vanish(lambda: &Partition, diagram: &ReverseDiagram, d: usize) -> bool {
    let rho = Partition::staircase(d);
    let xi_base = Composition::new(
        (1..=d)
            .map(|i| lambda.part(i) as i64 + rho.part(i) as i64)
            .collect(),
    );
    let shift = crate::weights::lambda_rho_one(lambda, d);
    let mut sum = MPoly::zero();
    for h in crate::hatted::enumerate_hatted(diagram, d) {
        if crate::hatted::bad_guy_cut(&h, lambda).is_none() {
            continue;
        }
        let weight = crate::hatted::weight_d_xi_h(&shift, &h);
        if weight.is_zero() {
            continue;
        }
        let omega = crate::partition::content(&h.unbarred_word(), d).expect("range");
        sum += &(&weight * &alternant(&xi_base.add(&omega), d));
    }
    sum.is_zero()
}
