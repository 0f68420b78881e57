//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output; exits nonzero on a failure.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use chromsym::csf::{chromatic_symmetric_function, csf_coloring_oracle};
use chromsym::graph::{make_complete, make_spider, make_star, make_windmill, Graph, SpiderSpec};
use chromsym::partition::{partitions_of, Partition};
use chromsym::positivity::{
    full_report, has_connected_partition, missing_connected_type, schur_dominance_violation, Criterion,
};
use chromsym::scan::{scan, Conjecture, ScanConfig, ScanStatus};
use chromsym::spider::{
    all_witnesses, induction_witness, quotient_witness_1, quotient_witness_3, short_legs_witness,
    spider_e_negativity_decision,
};
use chromsym::symfunc::{jacobi_trudi_s_in_e, Basis, Rational, SymFunc};
use chromsym::treegen::{free_trees, TreeCode, TreeFilter};
use common::*;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn int(c: i64) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn spider(legs: &str) -> (SpiderSpec, Graph) {
    let spec: SpiderSpec = legs.parse().unwrap();
    let g = make_spider(&spec).unwrap();
    (spec, g)
}

fn expand(g: &Graph, basis: Basis) -> SymFunc {
    chromatic_symmetric_function(g).unwrap().to_basis(basis).unwrap()
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn spiders(n: usize) -> Vec<SpiderSpec> {
    partitions_of(n - 1).into_iter().filter(|l| l.len() >= 3).map(|l| SpiderSpec::new(l).unwrap()).collect()
}

fn trees(n: usize) -> Vec<TreeCode> {
    free_trees(n, TreeFilter::All).unwrap().collect()
}

fn exact(f: &SymFunc, want: &[(&str, i64)]) -> Result<(), String> {
    let expected = SymFunc::from_terms(f.basis(), f.degree(), want.iter().map(|&(l, c)| (p(l), int(c)))).unwrap();
    ensure(*f == expected, || format!("got {f}"))
}

fn c1_spider_411_expansions() -> Outcome {
    let start = Instant::now();
    let (_, g) = spider("4,1,1");
    let x = chromatic_symmetric_function(&g).unwrap();
    let e = x.to_basis(Basis::E).unwrap();
    let s = x.to_basis(Basis::S).unwrap();
    exact(
        &e,
        &[
            ("2,2,2,1", 1),
            ("3,2,1,1", 4),
            ("3,2,2", -3),
            ("3,3,1", 10),
            ("4,2,1", 10),
            ("4,3", 17),
            ("5,1,1", 4),
            ("5,2", 3),
            ("6,1", 11),
            ("7", 7),
        ],
    )?;
    exact(
        &s,
        &[
            ("1,1,1,1,1,1,1", 64),
            ("2,1,1,1,1,1", 88),
            ("2,2,1,1,1", 76),
            ("2,2,2,1", 57),
            ("3,1,1,1,1", 36),
            ("3,2,1,1", 36),
            ("3,2,2", 18),
            ("3,3,1", 4),
            ("4,1,1,1", 5),
            ("4,2,1", 6),
            ("4,3", 1),
        ],
    )?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("10 e-terms and 11 s-terms exact in {took:.1?}"))
}

fn c2_short_legs_coefficient() -> Outcome {
    let mut checked = 0;
    for n in 4..=14 {
        for spec in spiders(n) {
            let m = spec.legs().largest();
            if m >= n / 2 {
                continue;
            }
            let c = expand(&make_spider(&spec).unwrap(), Basis::E).coeff(&Partition::from_sizes([n - m - 1, m + 1]));
            let want = if m + 1 == n - m - 1 {
                Rational::new(BigInt::from(-(n as i64)), BigInt::from(2))
            } else {
                int(-(n as i64))
            };
            ensure(c == want, || format!("{spec}: coefficient {c}, expected {want}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} spiders with n <= 14"))
}

fn c3_coefficient_identities() -> Outcome {
    for r in 3..=11 {
        let (_, g) = spider(&format!("{r},1,1"));
        let c = expand(&g, Basis::E).coeff(&Partition::from_sizes([r - 1, 2, 2]));
        ensure(c == int(1 - r as i64), || format!("S({r},1,1): {c}"))?;
    }
    let mut pairs = 0;
    for k in 1..=7 {
        for l in 1..=7 {
            let (r, s) = (2 * k, 2 * l);
            if r + s + 3 > 16 {
                continue;
            }
            let (_, g) = spider(&format!("{r},{s},1,1"));
            let mut sizes = vec![3];
            sizes.extend(std::iter::repeat_n(2, k + l));
            let c = expand(&g, Basis::E).coeff(&Partition::from_sizes(sizes));
            ensure(c == int(7 - 2 * (r + s) as i64), || format!("S({r},{s},1,1): {c}"))?;
            pairs += 1;
        }
    }
    Ok(format!("S(r,1,1) for 3 <= r <= 11 and {pairs} spiders S(2k,2l,1,1) with n <= 16"))
}

fn c4_witness_validity() -> Outcome {
    let (mut witnesses, mut by_oracle) = (0, 0);
    for n in 4..=12 {
        for spec in spiders(n) {
            let g = make_spider(&spec).unwrap();
            let oracle = (n <= 9).then(|| connected_types_by_set_partitions(&g));
            for w in all_witnesses(&spec) {
                ensure(w.missing_type.weight() == n, || format!("{w}: wrong weight"))?;
                ensure(!has_connected_partition(&g, &w.missing_type).unwrap(), || format!("{w} is not missing"))?;
                if let Some(types) = &oracle {
                    ensure(!types.contains(&w.missing_type), || format!("{w} present by set partitions"))?;
                    by_oracle += 1;
                }
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} witnesses confirmed missing ({by_oracle} also by set-partition enumeration)"))
}

fn c5_oracle_equivalences() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(|n| trees(n).into_iter().map(|t| t.to_graph())).collect();
    graphs.extend((2..=5).map(|n| make_complete(n).unwrap()));
    graphs.push(make_windmill(2, 3).unwrap());
    graphs.push(make_windmill(3, 2).unwrap());
    for g in &graphs {
        let fast = chromatic_symmetric_function(g).unwrap().to_basis(Basis::M).unwrap();
        ensure(fast == csf_coloring_oracle(g).unwrap(), || format!("CSF differs on {:?}", g.edges()))?;
    }

    let mut partition_graphs: Vec<Graph> = (1..=9).flat_map(|n| trees(n).into_iter().map(|t| t.to_graph())).collect();
    partition_graphs.extend((1..=8).map(|s| random_connected_graph(9, 3, s)));
    for g in &partition_graphs {
        let types = connected_types_by_set_partitions(g);
        for mu in partitions_of(g.n()) {
            ensure(has_connected_partition(g, &mu).unwrap() == types.contains(&mu), || {
                format!("connected type {mu} on {:?}", g.edges())
            })?;
        }
    }

    let mut shapes = 0;
    for n in 1..=10 {
        for lambda in partitions_of(n) {
            let via_kostka = SymFunc::basis_element(Basis::S, lambda.clone()).to_basis(Basis::E).unwrap();
            ensure(jacobi_trudi_s_in_e(&lambda) == via_kostka, || format!("s_{lambda}"))?;
            shapes += 1;
        }
    }

    for n in 1..=9 {
        let ours: HashSet<String> = trees(n).iter().map(|t| ahu_canonical(&t.to_graph())).collect();
        let want = tree_classes_by_prufer(n);
        ensure(trees(n).len() == want.len() && ours == want, || format!("tree classes differ at n = {n}"))?;
    }
    Ok(format!(
        "CSF on {} graphs, connected types on {} graphs, {shapes} Schur functions, tree counts n <= 9",
        graphs.len(),
        partition_graphs.len()
    ))
}

fn c6_soundness_sweeps() -> Outcome {
    let mut fired = [0usize; Criterion::ALL.len()];
    let mut total = 0;
    for n in 1..=10 {
        for code in trees(n) {
            let g = code.to_graph();
            let x = chromatic_symmetric_function(&g).unwrap();
            let e_pos = x.to_basis(Basis::E).unwrap().is_nonnegative();
            let s_pos = x.to_basis(Basis::S).unwrap().is_nonnegative();
            ensure(!e_pos || s_pos, || format!("{code}: e-positive but not Schur-positive"))?;
            for (k, c) in Criterion::ALL.iter().enumerate() {
                if c.check(&g).is_some() {
                    fired[k] += 1;
                    let refuted = if c.certifies_schur() { !s_pos } else { !e_pos };
                    ensure(refuted, || format!("{code}: {c} fired on a positive tree"))?;
                }
            }
            if e_pos {
                ensure(missing_connected_type(&g).unwrap().is_none(), || format!("{code}: e-positive, type missing"))?;
            }
            if s_pos {
                ensure(schur_dominance_violation(&g).unwrap().is_none(), || format!("{code}: Schur-positive, violation"))?;
            }
            total += 1;
        }
    }
    let counts: Vec<String> = Criterion::ALL.iter().zip(fired).map(|(c, k)| format!("{c} {k}")).collect();
    Ok(format!("{total} trees; fired: {}", counts.join(", ")))
}

fn c7_degree4_e() -> Outcome {
    let mut cfg = ScanConfig::new(Conjecture::Degree4E, 1, 12);
    cfg.workers = Some(1);
    let one = scan(&cfg).unwrap();
    cfg.workers = Some(3);
    let three = scan(&cfg).unwrap();
    ensure(one.status == ScanStatus::Verified, || format!("status {}", one.status.name()))?;
    ensure(one.content() == three.content(), || "scan differs across worker counts".into())?;
    let mut population = 0;
    for n in 1..=12 {
        let filtered: Vec<TreeCode> = trees(n).into_iter().filter(|t| t.max_degree() >= 4).collect();
        let examined = one.per_n.iter().find(|s| s.n == n).map_or(0, |s| s.examined);
        ensure(examined == filtered.len() as u64 && one.per_n.iter().all(|s| s.complete), || {
            format!("n = {n}: examined {examined} of {}", filtered.len())
        })?;
        for t in &filtered {
            ensure(!expand(&t.to_graph(), Basis::E).is_nonnegative(), || format!("{t} is e-positive"))?;
        }
        population += filtered.len();
    }
    Ok(format!(
        "VERIFIED; {population} trees with a degree >= 4 vertex among all trees n <= 12 (416 of the 551 at n = 12), each rechecked by exact expansion"
    ))
}

fn c8_halfdegree_schur() -> Outcome {
    let mut cfg = ScanConfig::new(Conjecture::HalfDegreeSchur, 2, 12);
    cfg.workers = Some(1);
    let one = scan(&cfg).unwrap();
    cfg.workers = Some(3);
    let three = scan(&cfg).unwrap();
    ensure(one.status == ScanStatus::Verified, || format!("status {}", one.status.name()))?;
    ensure(one.content() == three.content(), || "scan differs across worker counts".into())?;
    for s in &one.per_n {
        let w = s.witnesses.first().ok_or_else(|| format!("no witness at n = {}", s.n))?;
        let g = w.to_graph();
        ensure(g.n() == s.n && (0..s.n).any(|v| g.degree(v) == s.n / 2), || format!("{w} lacks a degree-n/2 vertex"))?;
        ensure(expand(&g, Basis::S).is_nonnegative(), || format!("{w} is not Schur-positive"))?;
    }
    ensure(one.per_n.len() == 11, || "missing values of n".into())?;
    Ok("VERIFIED for 2 <= n <= 12, witnesses rechecked by exact Schur expansion (n <= 19 not reproduced)".into())
}

fn c9_named_examples() -> Outcome {
    let start = Instant::now();
    for legs in ["2,1,1", "6,2,1"] {
        ensure(full_report(&spider(legs).1).unwrap().e_positive, || format!("S({legs}) not e-positive"))?;
    }
    let cases: [(&str, Option<SpiderWitnessCheck>); 4] = [
        ("1,1,1", Some((short_legs_witness, "2,2"))),
        ("2,2,1,1", Some((short_legs_witness, "4,3"))),
        ("8,2,2,1", Some((quotient_witness_1, "4,4,3,3"))),
        ("13,6,4,1,1", None),
    ];
    for (legs, rule) in cases {
        let (spec, g) = spider(legs);
        ensure(!expand(&g, Basis::E).is_nonnegative(), || format!("S({legs}) e-positive"))?;
        if let Some((f, want)) = rule {
            let got = f(&spec).map(|w| w.missing_type);
            ensure(got == Some(p(want)), || format!("S({legs}) witness {got:?}"))?;
            ensure(!has_connected_partition(&g, &p(want)).unwrap(), || format!("S({legs}) has {want}"))?;
        }
    }
    let (spec, g) = spider("13,6,4,1,1");
    let w = quotient_witness_3(&spec, 2).map(|w| w.missing_type);
    ensure(w == Some(p("9,9,8")) && !has_connected_partition(&g, &p("9,9,8")).unwrap(), || format!("{w:?}"))?;
    let (spec, _) = spider("6,2,1,1");
    ensure(induction_witness(&spec).map(|w| w.missing_type) == Some(p("4,4,3")), || "S(6,2,1,1)".into())?;
    for legs in ["4,1,1", "6,4,1,1"] {
        let (spec, g) = spider(legs);
        ensure(missing_connected_type(&g).unwrap().is_none(), || format!("S({legs}) misses a type"))?;
        ensure(!expand(&g, Basis::E).is_nonnegative(), || format!("S({legs}) e-positive"))?;
        if legs == "6,4,1,1" {
            ensure(spider_e_negativity_decision(&spec).is_none(), || "a rule fired on S(6,4,1,1)".into())?;
        }
    }
    for d in 3..=4 {
        for k in 2..=4 {
            let g = make_windmill(d, k).unwrap();
            ensure(!expand(&g, Basis::E).is_nonnegative(), || format!("W^{d}_{k} e-positive"))?;
        }
    }
    for n in 4..=10 {
        ensure(!expand(&make_star(n).unwrap(), Basis::S).is_nonnegative(), || format!("S_{n} Schur-positive"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("all named spiders, windmills and stars in {took:.1?}"))
}

type SpiderWitnessCheck = (fn(&SpiderSpec) -> Option<chromsym::spider::SpiderWitness>, &'static str);

fn main() {
    let criteria: [Check; 9] = [
        ("S(4,1,1) e- and Schur expansions", c1_spider_411_expansions),
        ("short-legs coefficient -n or -n/2, n <= 14", c2_short_legs_coefficient),
        ("coefficient identities for S(r,1,1) and S(2k,2l,1,1)", c3_coefficient_identities),
        ("spider witness validity, n <= 12", c4_witness_validity),
        ("oracle equivalences", c5_oracle_equivalences),
        ("criterion soundness over all trees n <= 10", c6_soundness_sweeps),
        ("degree4-e conjecture, n <= 12", c7_degree4_e),
        ("halfdegree-schur conjecture, 2 <= n <= 12", c8_halfdegree_schur),
        ("named examples", c9_named_examples),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("acceptance {} {tag}: {name} ({detail}) [{:.2?}]", i + 1, start.elapsed());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
