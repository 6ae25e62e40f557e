//! Named verification suites: each packages one family of identity,
//! involution, or bijection checks into a machine-readable report. The CLI
//! `verify` subcommand and the acceptance tests both run through here.

use crate::error::{Error, Result};
use crate::hatted::{
    apply_s_i, apply_sigma, bad_guy_cut, bad_guy_star, bender_knuth, enumerate_hatted,
    sigma_on_composition, weight_d_xi_h, Hat, HattedEntry, HattedTableau,
};
use crate::partition::{content, primed, Composition, Partition};
use crate::phi::{phi, phi_inverse};
use crate::poly::MPoly;
use crate::puzzle::{enumerate_puzzles, enumerate_trapezoid_puzzles};
use crate::schur::{
    alternant, verify_bad_guys_vanish, verify_bialternant, verify_lemma_induction,
    verify_lemma_product_alternant,
};
use crate::tableaux::{
    enumerate_lr_tableaux, enumerate_reverse_tableaux, Entry, ReverseBarredTableau,
    ReverseDiagram, SkewBarredTableau,
};
use crate::weights::{
    coefficient_table_by_tableaux, is_positive, weight_c_l, weight_factors, PositivityCriterion,
    ALL_CRITERIA,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl CaseResult {
    fn ok(id: impl Into<String>) -> Self {
        CaseResult {
            id: id.into(),
            pass: true,
            detail: String::new(),
        }
    }
    fn check(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        let detail = if pass { String::new() } else { detail.into() };
        CaseResult {
            id: id.into(),
            pass,
            detail,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.cases.len(),
            "failures": self.cases.iter().filter(|c| !c.pass).count(),
            "cases": self.cases.iter().map(|c| json!({
                "id": c.id,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        for c in &self.cases {
            if !c.pass {
                out.push_str(&format!("FAIL {}: {}\n", c.id, c.detail));
            } else if verbose {
                out.push_str(&format!("ok   {}\n", c.id));
            }
        }
        let failures = self.cases.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "suite {}: {} cases, {} failures -> {}\n",
            self.suite,
            self.cases.len(),
            failures,
            if failures == 0 { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub d: usize,
    pub n: usize,
    pub max_shape: Partition,
    pub cases: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            d: 3,
            n: 5,
            max_shape: Partition::new(vec![3, 3, 3]).unwrap(),
            cases: 200,
            seed: 20060801,
        }
    }
}

pub const SUITE_NAMES: [&str; 8] = [
    "bialternant",
    "lra",
    "induction",
    "badguys",
    "involutions",
    "bijection",
    "positivity",
    "symmetry",
];

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Vec<SuiteReport>> {
    match name {
        "bialternant" => Ok(vec![bialternant_suite(params)]),
        "lra" => Ok(vec![lra_suite(params)]),
        "induction" => Ok(vec![induction_suite(params)]),
        "badguys" => Ok(vec![badguys_suite(params)]),
        "involutions" => Ok(vec![involutions_suite(params)]),
        "bijection" => Ok(vec![bijection_suite(params)]),
        "positivity" => Ok(vec![positivity_suite(params)]),
        "symmetry" => Ok(vec![symmetry_suite(params)]),
        "all" => SUITE_NAMES
            .iter()
            .map(|n| Ok(run_suite(n, params)?.remove(0)))
            .collect(),
        other => Err(Error::Parse(format!("unknown suite {:?}", other))),
    }
}

fn truncated(bound: &Partition, d: usize) -> Partition {
    Partition::new((1..=d).map(|i| bound.part(i)).collect()).expect("truncation stays sorted")
}

/// a_ρ(x|y) s_μ(x|y) == a_{μ+ρ}(x|y) for all μ in the box, for every d up
/// to the requested one.
pub fn bialternant_suite(params: &SuiteParams) -> SuiteReport {
    let mut jobs = Vec::new();
    for d in 1..=params.d {
        for mu in Partition::all_in(&truncated(&params.max_shape, d), d) {
            jobs.push((d, mu));
        }
    }
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(d, mu)| {
            CaseResult::check(
                format!("bialternant d={} mu={:?}", d, mu),
                verify_bialternant(&mu, d),
                "a_rho * s_mu != a_{mu+rho}",
            )
        })
        .collect();
    SuiteReport {
        suite: "bialternant".into(),
        cases,
    }
}

/// The product-with-alternant expansion over B(μ), on exhaustive small
/// shapes per rank.
pub fn lra_suite(params: &SuiteParams) -> SuiteReport {
    let mut jobs = Vec::new();
    for d in 1..=params.d.min(3) {
        let bound = if d <= 2 {
            truncated(&Partition::new(vec![2, 2]).unwrap(), d)
        } else {
            Partition::new(vec![2, 1, 0]).unwrap()
        };
        for lambda in Partition::all_in(&bound, d) {
            for mu in Partition::all_in(&bound, d) {
                jobs.push((d, lambda.clone(), mu));
            }
        }
    }
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(d, lambda, mu)| {
            CaseResult::check(
                format!("lra d={} lambda={:?} mu={:?}", d, lambda, mu),
                verify_lemma_product_alternant(&lambda, &ReverseDiagram::new(mu), d),
                "a_{lambda+rho} s_mu != sum over B(mu)",
            )
        })
        .collect();
    SuiteReport {
        suite: "lra".into(),
        cases,
    }
}

/// The induction identity over bar patterns: exhaustive on tiny subtableaux
/// plus randomized (R, ξ) cases.
pub fn induction_suite(params: &SuiteParams) -> SuiteReport {
    let mut cases = Vec::new();

    // exhaustive: every partial filling of shape (2,1) with d=2 and small ξ
    let d = 2;
    let diagram = ReverseDiagram::new(Partition::new(vec![2, 1]).unwrap());
    let order = diagram.cells_reading_order();
    let mut fillings: Vec<ReverseBarredTableau> = Vec::new();
    let variants = d + 1; // empty or value 1..d
    let k = order.len();
    let mut idx = vec![0usize; k];
    loop {
        let mut t = ReverseBarredTableau::empty(diagram.clone(), d);
        for (j, &(r, c)) in order.iter().enumerate() {
            if idx[j] > 0 {
                t.set(r, c, Some(Entry::plain(idx[j])));
            }
        }
        fillings.push(t);
        let mut j = 0;
        loop {
            if j == k {
                break;
            }
            idx[j] += 1;
            if idx[j] < variants {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if idx.iter().all(|&x| x == 0) {
            break;
        }
    }
    let xi_list = [
        Composition::new(vec![0, 0]),
        Composition::new(vec![2, 1]),
        Composition::new(vec![1, 2]),
    ];
    let exhaustive: Vec<CaseResult> = fillings
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| {
            xi_list.iter().enumerate().map(move |(j, xi)| {
                CaseResult::check(
                    format!("induction exhaustive #{}/xi{}", i, j),
                    verify_lemma_induction(r, xi),
                    "identity failed",
                )
            })
        })
        .collect();
    cases.extend(exhaustive);

    // randomized: R inside (3,2) with d=3, ξ <= (4,4,4)
    let mut rng = StdRng::seed_from_u64(params.seed);
    let d = 3;
    let diagram = ReverseDiagram::new(Partition::new(vec![3, 2, 0]).unwrap());
    let order = diagram.cells_reading_order();
    let mut random_jobs = Vec::new();
    for case in 0..params.cases {
        let mut t = ReverseBarredTableau::empty(diagram.clone(), d);
        for &(r, c) in &order {
            if rng.random_bool(0.6) {
                t.set(r, c, Some(Entry::plain(rng.random_range(1..=d))));
            }
        }
        let xi = Composition::new((0..d).map(|_| rng.random_range(0..=4i64)).collect());
        random_jobs.push((case, t, xi));
    }
    let randomized: Vec<CaseResult> = random_jobs
        .into_par_iter()
        .map(|(case, t, xi)| {
            CaseResult::check(
                format!("induction random #{} xi={:?}", case, xi),
                verify_lemma_induction(&t, &xi),
                "identity failed",
            )
        })
        .collect();
    cases.extend(randomized);

    SuiteReport {
        suite: "induction".into(),
        cases,
    }
}

/// Bad-Guy cancellation: the direct sum is zero, and the pairing H -> H* is
/// a weight-preserving sign-reversing involution.
pub fn badguys_suite(params: &SuiteParams) -> SuiteReport {
    let mut jobs = Vec::new();
    for d in 2..=params.d.min(3) {
        let mu_bound = truncated(&Partition::new(vec![2, 2]).unwrap(), d.min(2));
        let mu_bound = Partition::with_length(mu_bound.parts().to_vec(), d).unwrap();
        let lam_bound = truncated(&Partition::new(vec![2, 2, 2]).unwrap(), d);
        for mu in Partition::all_in(&mu_bound, d) {
            for lambda in Partition::all_in(&lam_bound, d) {
                jobs.push((d, lambda.clone(), mu.clone()));
            }
        }
    }
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .flat_map_iter(|(d, lambda, mu)| {
            let id = format!("badguys d={} lambda={:?} mu={:?}", d, lambda, mu);
            let diagram = ReverseDiagram::new(mu);
            let direct = verify_bad_guys_vanish(&lambda, &diagram, d);

            // pairing route: involution, weight equality, index transposition
            let xi = crate::weights::lambda_rho_one(&lambda, d);
            let rho = Partition::staircase(d);
            let lam_rho = Composition::new(
                (1..=d)
                    .map(|k| lambda.part(k) as i64 + rho.part(k) as i64)
                    .collect(),
            );
            let mut pairing_ok = true;
            let mut pair_sum = MPoly::zero();
            for h in enumerate_hatted(&diagram, d) {
                let Some((_, i)) = bad_guy_cut(&h, &lambda) else {
                    continue;
                };
                let star = match bad_guy_star(&h, &lambda) {
                    Some(s) => s,
                    None => {
                        pairing_ok = false;
                        continue;
                    }
                };
                pairing_ok &= bad_guy_star(&star, &lambda).as_ref() == Some(&h);
                pairing_ok &= weight_d_xi_h(&xi, &h) == weight_d_xi_h(&xi, &star);
                let idx_h = lam_rho.add(&content(&h.unbarred_word(), d).unwrap());
                let idx_star = lam_rho.add(&content(&star.unbarred_word(), d).unwrap());
                pairing_ok &= idx_h.swap_adjacent(i) == idx_star;
                pair_sum += &(&weight_d_xi_h(&xi, &h) * &alternant(&idx_h, d));
            }
            vec![
                CaseResult::check(format!("{} direct-sum", id), direct, "sum != 0"),
                CaseResult::check(
                    format!("{} pairing", id),
                    pairing_ok && pair_sum.is_zero(),
                    "pairing broken or paired sum nonzero",
                ),
            ]
        })
        .collect();
    SuiteReport {
        suite: "badguys".into(),
        cases,
    }
}

/// s_i² = id, shape/validity preservation, the six transport properties,
/// decomposition independence, and Bender-Knuth recovery.
pub fn involutions_suite(params: &SuiteParams) -> SuiteReport {
    let mut jobs = Vec::new();
    for d in 2..=params.d.min(3) {
        for mu in Partition::all_in(&truncated(&Partition::new(vec![3, 2]).unwrap(), 2), 2) {
            let mu = Partition::with_length(mu.parts().to_vec(), d).unwrap();
            jobs.push((d, mu));
        }
    }
    let xi = Composition::new(vec![4, 2, 1]);
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(d, mu)| {
            let id = format!("involutions d={} mu={:?}", d, mu);
            let diagram = ReverseDiagram::new(mu);
            let xi = Composition::new((1..=d).map(|i| xi.entry(i)).collect());
            let mut ok = true;
            let mut msg = String::new();
            for h in enumerate_hatted(&diagram, d) {
                for i in 1..d {
                    let (si, map) = apply_s_i(&h, i);
                    if !si.is_valid() {
                        ok = false;
                        msg = format!("invalid image at i={}", i);
                        break;
                    }
                    if apply_s_i(&si, i).0 != h {
                        ok = false;
                        msg = format!("s_{} not involutive", i);
                        break;
                    }
                    if !lemma_properties_hold(&h, &si, &map, i, &xi, d) {
                        ok = false;
                        msg = format!("transport property failed at i={}", i);
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            // decomposition independence for the longest element when d = 3
            if ok && d == 3 {
                for h in enumerate_hatted(&diagram, d) {
                    let omega = content(&h.unbarred_word(), d).unwrap();
                    for word in [&[1usize, 2, 1][..], &[2, 1, 2][..]] {
                        let img = apply_sigma(word, &h);
                        if content(&img.unbarred_word(), d).unwrap()
                            != sigma_on_composition(word, &omega)
                            || weight_d_xi_h(&sigma_on_composition(word, &xi), &img)
                                != weight_d_xi_h(&xi, &h)
                        {
                            ok = false;
                            msg = "decomposition independence failed".into();
                            break;
                        }
                    }
                    if !ok {
                        break;
                    }
                }
            }
            // Bender-Knuth recovery on hat-free tableaux
            if ok {
                for r in enumerate_reverse_tableaux(&diagram, d) {
                    let h = HattedTableau::from_cells(
                        diagram.clone(),
                        d,
                        r.entries()
                            .map(|(rc, e)| {
                                (
                                    rc,
                                    HattedEntry {
                                        value: e.value,
                                        hat: Hat::None,
                                    },
                                )
                            })
                            .collect(),
                    );
                    for i in 1..d {
                        if apply_s_i(&h, i).0.bar_projection() != bender_knuth(&r, i) {
                            ok = false;
                            msg = format!("Bender-Knuth mismatch at i={}", i);
                            break;
                        }
                    }
                    if !ok {
                        break;
                    }
                }
            }
            CaseResult::check(id, ok, msg)
        })
        .collect();
    SuiteReport {
        suite: "involutions".into(),
        cases,
    }
}

fn lemma_properties_hold(
    h: &HattedTableau,
    si: &HattedTableau,
    map: &crate::hatted::EntryMap,
    i: usize,
    xi: &Composition,
    d: usize,
) -> bool {
    let word_prefix = |t: &HattedTableau, stop: (usize, usize)| -> Vec<usize> {
        let mut w = Vec::new();
        for (rc, e) in t.entries() {
            if rc == stop {
                break;
            }
            if e.hat == Hat::None {
                w.push(e.value);
            }
        }
        w
    };
    let omega = content(&h.unbarred_word(), d).unwrap();
    if content(&si.unbarred_word(), d).unwrap() != omega.swap_adjacent(i) {
        return false;
    }
    let sxi = xi.swap_adjacent(i);
    if weight_d_xi_h(&sxi, si) != weight_d_xi_h(xi, h) {
        return false;
    }
    for (&(r, c), &(nr, nc)) in &map.left {
        let a = h.get(r, c).unwrap();
        let b = match si.get(nr, nc) {
            Some(b) if b.hat == Hat::Left => b,
            _ => return false,
        };
        let sigma_v = if a.value == i {
            i + 1
        } else if a.value == i + 1 {
            i
        } else {
            a.value
        };
        if b.value != sigma_v {
            return false;
        }
        let pre_h = content(&word_prefix(h, (r, c)), d).unwrap();
        let pre_si = content(&word_prefix(si, (nr, nc)), d).unwrap();
        if pre_si.entry(b.value) != pre_h.entry(a.value) {
            return false;
        }
        let e_h = xi.entry(a.value) + pre_h.entry(a.value);
        let e_si = sxi.entry(b.value) + pre_si.entry(b.value);
        if e_si != e_h {
            return false;
        }
    }
    for (&(r, c), &(nr, nc)) in &map.right {
        let a = h.get(r, c).unwrap();
        let b = match si.get(nr, nc) {
            Some(b) if b.hat == Hat::Right => b,
            _ => return false,
        };
        let f_h = primed(a.value, d) as i64 + c as i64 - r as i64;
        let f_si = primed(b.value, d) as i64 + nc as i64 - nr as i64;
        if f_si != f_h {
            return false;
        }
    }
    true
}

/// Φ and Φ⁻¹ round-trips, |LP+| = |LR+| and |LP| = |LR|, and per-piece
/// factor identity, over all of P_{2,n'} for n' <= n plus the figure
/// instances that fit inside the requested n.
pub fn bijection_suite(params: &SuiteParams) -> SuiteReport {
    let d = 2;
    let mut jobs = Vec::new();
    for n in d..=params.n {
        let bound = Partition::new(vec![(n - d) as u32; d]).unwrap();
        for lambda in Partition::all_in(&bound, d) {
            for mu in Partition::all_in(&bound, d) {
                for nu in Partition::all_in(&bound, d) {
                    jobs.push((d, n, lambda.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    // figure instances
    if params.n >= 9 {
        jobs.push((
            3,
            9,
            Partition::new(vec![4, 2, 2]).unwrap(),
            Partition::new(vec![4, 3, 1]).unwrap(),
            Partition::new(vec![6, 5, 2]).unwrap(),
        ));
    }
    if params.n >= 13 {
        jobs.push((
            3,
            13,
            Partition::new(vec![5, 2, 1]).unwrap(),
            Partition::new(vec![8, 5, 1]).unwrap(),
            Partition::new(vec![9, 4, 2]).unwrap(),
        ));
    }

    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(d, n, lambda, mu, nu)| bijection_instance(d, n, &lambda, &mu, &nu))
        .collect();
    SuiteReport {
        suite: "bijection".into(),
        cases,
    }
}

/// One (λ, μ, ν, n) bijection check, both flavors.
pub fn bijection_instance(
    d: usize,
    n: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> CaseResult {
    let id = format!(
        "bijection d={} n={} lambda={:?} mu={:?} nu={:?}",
        d, n, lambda, mu, nu
    );
    let run = || -> Result<String> {
        let diagram = ReverseDiagram::new(mu.clone());
        let lr_all = enumerate_lr_tableaux(lambda, &diagram, Some(nu), d);
        let lr_pos: Vec<&SkewBarredTableau> = lr_all
            .iter()
            .filter(|l| is_positive(l, PositivityCriterion::C1).unwrap_or(false))
            .collect();
        let puz = enumerate_puzzles(lambda, mu, nu, n, d)?;
        let traps = enumerate_trapezoid_puzzles(lambda, mu, nu, n, d)?;
        if puz.len() != lr_pos.len() {
            return Ok(format!("|LP+| = {} but |LR+| = {}", puz.len(), lr_pos.len()));
        }
        if traps.len() != lr_all.len() {
            return Ok(format!("|LP| = {} but |LR| = {}", traps.len(), lr_all.len()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for p in &puz {
            let (l, piece_cells) = phi(p)?;
            if !lr_pos.iter().any(|&x| x == &l) {
                return Ok("phi image not in LR+".into());
            }
            if !seen.insert(format!("{:?}", l)) {
                return Ok("phi not injective".into());
            }
            let tab: std::collections::BTreeMap<(usize, usize), _> =
                weight_factors(&l).into_iter().collect();
            for (anchor, cell) in &piece_cells {
                if p.piece_factor(*anchor) != tab[cell] {
                    return Ok("factor mismatch under phi".into());
                }
            }
            if piece_cells.len() != tab.len() {
                return Ok("piece/bar count mismatch".into());
            }
            if &phi_inverse(&l, n, false)? != p {
                return Ok("phi_inverse(phi(P)) != P".into());
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for t in &traps {
            let (l, _) = phi(t)?;
            if !lr_all.contains(&l) {
                return Ok("trapezoid phi image not in LR".into());
            }
            if !seen.insert(format!("{:?}", l)) {
                return Ok("trapezoid phi not injective".into());
            }
            if &phi_inverse(&l, n, true)? != t {
                return Ok("trapezoid phi_inverse(phi(P)) != P".into());
            }
        }
        // trapezoid weight sum agrees with the puzzle sum
        let mut sum_p = MPoly::zero();
        for p in &puz {
            sum_p += &p.weight().1;
        }
        let mut sum_t = MPoly::zero();
        for t in &traps {
            sum_t += &t.weight().1;
        }
        if sum_p != sum_t {
            return Ok("trapezoid sum != puzzle sum".into());
        }
        Ok(String::new())
    };
    match run() {
        Ok(msg) if msg.is_empty() => CaseResult::ok(id),
        Ok(msg) => CaseResult::check(id, false, msg),
        Err(e) => CaseResult::check(id, false, format!("error: {}", e)),
    }
}

/// All six positivity criteria agree, nonzero weights have all factors
/// e > f, and the degree law deg c = |λ|+|μ|−|ν| holds.
pub fn positivity_suite(params: &SuiteParams) -> SuiteReport {
    let d = params.d;
    let bound = truncated(&params.max_shape, d);
    let mut jobs = Vec::new();
    for lambda in Partition::all_in(&bound, d) {
        for mu in Partition::all_in(&bound, d) {
            jobs.push((lambda.clone(), mu.clone()));
        }
    }
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(lambda, mu)| {
            let id = format!("positivity d={} lambda={:?} mu={:?}", d, lambda, mu);
            let diagram = ReverseDiagram::new(mu.clone());
            let mut ok = true;
            let mut msg = String::new();
            for l in enumerate_lr_tableaux(&lambda, &diagram, None, d) {
                let answers: Vec<bool> = ALL_CRITERIA
                    .iter()
                    .map(|&cr| is_positive(&l, cr).unwrap_or(false))
                    .collect();
                if answers.iter().any(|&a| a != answers[0]) {
                    ok = false;
                    msg = format!("criteria disagree: {:?}", answers);
                    break;
                }
                let (factors, poly) = weight_c_l(&l);
                if !poly.is_zero() && !factors.iter().all(|w| w.e > w.f) {
                    ok = false;
                    msg = "nonzero weight with a non-positive factor".into();
                    break;
                }
            }
            if ok {
                let table = coefficient_table_by_tableaux(&lambda, &diagram, d, false)
                    .expect("table");
                for (nu, poly) in &table.entries {
                    let want =
                        lambda.size() as i64 + mu.size() as i64 - nu.size() as i64;
                    if poly.total_degree().map(|x| x as i64) != Some(want) {
                        ok = false;
                        msg = format!("degree law fails at nu={:?}", nu);
                        break;
                    }
                }
            }
            CaseResult::check(id, ok, msg)
        })
        .collect();
    SuiteReport {
        suite: "positivity".into(),
        cases,
    }
}

/// c_{λ,μ}^ν == c_{μ,λ}^ν as polynomials, tablewise.
pub fn symmetry_suite(params: &SuiteParams) -> SuiteReport {
    let d = params.d;
    let bound = truncated(&params.max_shape, d);
    let all = Partition::all_in(&bound, d);
    let mut jobs = Vec::new();
    for (i, lambda) in all.iter().enumerate() {
        for mu in all.iter().skip(i) {
            jobs.push((lambda.clone(), mu.clone()));
        }
    }
    let cases: Vec<CaseResult> = jobs
        .into_par_iter()
        .map(|(lambda, mu)| {
            let id = format!("symmetry d={} lambda={:?} mu={:?}", d, lambda, mu);
            let t1 = coefficient_table_by_tableaux(&lambda, &ReverseDiagram::new(mu.clone()), d, false);
            let t2 = coefficient_table_by_tableaux(&mu, &ReverseDiagram::new(lambda.clone()), d, false);
            match (t1, t2) {
                (Ok(t1), Ok(t2)) => CaseResult::check(
                    id,
                    t1.entries == t2.entries,
                    "tables differ",
                ),
                _ => CaseResult::check(id, false, "table computation failed"),
            }
        })
        .collect();
    SuiteReport {
        suite: "symmetry".into(),
        cases,
    }
}
