use eqlr::partition::Partition;
use eqlr::puzzle::{enumerate_puzzles, enumerate_trapezoid_puzzles};
use eqlr::schur::expand_product_oracle;
use eqlr::tableaux::ReverseDiagram;
use eqlr::weights::coefficient_table_by_tableaux;
use eqlr::poly::MPoly;
use rayon::prelude::*;
use std::time::Instant;

fn main() {
    // criterion 2 probe: oracle vs tableaux over all pairs in (3,3,3), d=3
    let d = 3;
    let bound = Partition::new(vec![3, 3, 3]).unwrap();
    let all = Partition::all_in(&bound, d);
    eprintln!("partitions in box: {}", all.len());
    let t0 = Instant::now();
    let pairs: Vec<(Partition, Partition)> = all
        .iter()
        .flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let bad: usize = pairs
        .par_iter()
        .map(|(l, m)| {
            let diag = ReverseDiagram::new(m.clone());
            let t1 = coefficient_table_by_tableaux(l, &diag, d, false).unwrap();
            let t2 = expand_product_oracle(l, &diag, d).unwrap();
            usize::from(t1.entries != t2.entries)
        })
        .sum();
    eprintln!("criterion2: {} pairs, {} mismatches, {:?}", pairs.len(), bad, t0.elapsed());

    // criterion 3 probe: P_{3,6} triples
    let d = 3;
    let n = 6;
    let bound = Partition::new(vec![3, 3, 3]).unwrap();
    let all = Partition::all_in(&bound, d);
    let t0 = Instant::now();
    let mut triples = Vec::new();
    for l in &all {
        for m in &all {
            for v in &all {
                triples.push((l.clone(), m.clone(), v.clone()));
            }
        }
    }
    let bad: usize = triples
        .par_iter()
        .map(|(l, m, v)| {
            let diag = ReverseDiagram::new(m.clone());
            let tab = eqlr::weights::coefficient_by_tableaux(l, &diag, v, d, false).unwrap();
            let puz: MPoly = enumerate_puzzles(l, m, v, n, d)
                .unwrap()
                .iter()
                .fold(MPoly::zero(), |acc, p| acc + p.weight().1);
            let trap: MPoly = enumerate_trapezoid_puzzles(l, m, v, n, d)
                .unwrap()
                .iter()
                .fold(MPoly::zero(), |acc, p| acc + p.weight().1);
            usize::from(tab != puz || puz != trap)
        })
        .sum();
    eprintln!("criterion3 (P_3_6): {} triples, {} mismatches, {:?}", triples.len(), bad, t0.elapsed());
}
