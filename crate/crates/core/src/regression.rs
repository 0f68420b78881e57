//! Published worked examples, rerun as a pass/fail ledger.

use std::fmt;

use num_bigint::BigInt;

use crate::csf::chromatic_symmetric_function;
use crate::error::Result;
use crate::graph::{make_spider, make_star, make_windmill, Graph, SpiderSpec};
use crate::partition::{partitions_of, Partition};
use crate::positivity::{
    bipartite_degree_criterion, full_report, has_connected_partition, has_stable_partition, matching_criterion,
    missing_connected_type, schur_dominance_violation, short_legs_criterion,
};
use crate::spider::{
    induction_witness, matching_witness, quotient_witness_1, quotient_witness_3, short_legs_witness,
    spider_e_negativity_decision, spider_matching_class, MatchingClass, SpiderRule,
};
use crate::symfunc::{Basis, Rational, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Why it failed, or an error message.
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "PASS" } else { "FAIL" })?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn check(name: &str, body: impl FnOnce() -> Result<std::result::Result<(), String>>) -> Check {
    let (passed, detail) = match body() {
        Ok(Ok(())) => (true, String::new()),
        Ok(Err(why)) => (false, why),
        Err(e) => (false, format!("error: {e}")),
    };
    Check { name: name.to_string(), passed, detail }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn spider(legs: &[usize]) -> Result<(SpiderSpec, Graph)> {
    let spec = SpiderSpec::from_legs(legs.iter().copied())?;
    let g = make_spider(&spec)?;
    Ok((spec, g))
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn int(c: i64) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

fn expansion(g: &Graph, basis: Basis) -> Result<SymFunc> {
    chromatic_symmetric_function(g)?.to_basis(basis)
}

fn matches_exactly(f: &SymFunc, want: &[(&str, i64)]) -> std::result::Result<(), String> {
    let expected = SymFunc::from_terms(f.basis(), f.degree(), want.iter().map(|&(l, c)| (p(l), int(c))))
        .map_err(|e| e.to_string())?;
    ensure(*f == expected, || format!("got {f}"))
}

/// Every check, in a fixed order.
pub fn published_examples() -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check("X_S(4,1,1) e-expansion (10 terms)", || {
        let (_, g) = spider(&[4, 1, 1])?;
        Ok(matches_exactly(
            &expansion(&g, Basis::E)?,
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
        ))
    }));
    out.push(check("X_S(4,1,1) Schur expansion (11 terms)", || {
        let (_, g) = spider(&[4, 1, 1])?;
        Ok(matches_exactly(
            &expansion(&g, Basis::S)?,
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
        ))
    }));
    out.push(check("X_S(2,2,1,1) has -7 on e_(4,3)", || {
        let (_, g) = spider(&[2, 2, 1, 1])?;
        let c = expansion(&g, Basis::E)?.coeff(&p("4,3"));
        Ok(ensure(c == int(-7), || format!("coefficient {c}")))
    }));

    out.push(check("S_4 has no connected partition of type (2,2)", || {
        Ok(ensure(!has_connected_partition(&make_star(4)?, &p("2,2"))?, || "found one".into()))
    }));
    out.push(check("S_n has connected type λ iff λ = (k,1^(n-k)), 4 <= n <= 9", || {
        for n in 4..=9 {
            let g = make_star(n)?;
            for mu in partitions_of(n) {
                let hook = mu.parts()[1..].iter().all(|&x| x == 1);
                if has_connected_partition(&g, &mu)? != hook {
                    return Ok(Err(format!("S_{n}, {mu}")));
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("S(2,2,1,1) missing connected type (4,3)", || {
        let (spec, g) = spider(&[2, 2, 1, 1])?;
        let w = short_legs_witness(&spec);
        Ok(ensure(
            !has_connected_partition(&g, &p("4,3"))? && w.map(|w| w.missing_type) == Some(p("4,3")),
            || "type (4,3) not reported missing".into(),
        ))
    }));
    out.push(check("S(4,1,1) and S(6,4,1,1) have every connected type", || {
        for legs in [&[4, 1, 1][..], &[6, 4, 1, 1]] {
            let (spec, g) = spider(legs)?;
            if let Some(mu) = missing_connected_type(&g)? {
                return Ok(Err(format!("{spec} misses {mu}")));
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("S_n has stable type (n-1,1) but not (n-2,2), 4 <= n <= 10", || {
        for n in 4..=10 {
            let g = make_star(n)?;
            if !has_stable_partition(&g, &Partition::from_sizes([n - 1, 1]))?
                || has_stable_partition(&g, &Partition::from_sizes([n - 2, 2]))?
            {
                return Ok(Err(format!("S_{n}")));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("S_4 stable dominance violation ((3,1),(2,2))", || {
        let v = schur_dominance_violation(&make_star(4)?)?;
        Ok(ensure(v == Some((p("3,1"), p("2,2"))), || format!("got {v:?}")))
    }));
    out.push(check("S_n not Schur-positive, 4 <= n <= 10", || {
        for n in 4..=10 {
            let g = make_star(n)?;
            if bipartite_degree_criterion(&g).is_none() || expansion(&g, Basis::S)?.is_nonnegative() {
                return Ok(Err(format!("S_{n}")));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("S(4,1,1) Schur-positive, not e-positive", || {
        let (_, g) = spider(&[4, 1, 1])?;
        let r = full_report(&g)?;
        Ok(ensure(r.schur_positive && !r.e_positive && r.violated_stable_type.is_none(), || format!("{r:?}")))
    }));

    for (legs, want) in [(&[2usize, 1, 1][..], true), (&[6, 2, 1], true), (&[1, 1, 1], false)] {
        let (spec, _) = match spider(legs) {
            Ok(x) => x,
            Err(e) => {
                out.push(Check { name: format!("{legs:?}"), passed: false, detail: e.to_string() });
                continue;
            }
        };
        let name = format!("{spec} {}e-positive", if want { "" } else { "not " });
        out.push(check(&name, || {
            let r = full_report(&make_spider(&spec)?)?;
            Ok(ensure(r.e_positive == want, || format!("e_positive = {}", r.e_positive)))
        }));
    }

    out.push(check("spiders with three legs of length 1 fail the matching criterion", || {
        for a in 1..=3 {
            for b in 1..=a {
                for c in 1..=b {
                    let (spec, g) = spider(&[a, b, c, 1, 1, 1])?;
                    if matching_criterion(&g).is_none() {
                        return Ok(Err(spec.to_string()));
                    }
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("W^d_n not e-positive for d >= 3, n > 1 (3 <= d <= 4, 2 <= n <= 4)", || {
        for d in 3..=4 {
            for n in 2..=4 {
                let g = make_windmill(d, n)?;
                if short_legs_criterion(&g).is_none() || expansion(&g, Basis::E)?.is_nonnegative() {
                    return Ok(Err(format!("W^{d}_{n}")));
                }
            }
        }
        Ok(Ok(()))
    }));

    out.push(check("spider matching classes (2,1,1), (4,1,1,1,1), (3,2,2)", || {
        let class = |l: &[usize]| spider(l).map(|(s, _)| spider_matching_class(&s));
        let w = matching_witness(&spider(&[4, 1, 1, 1, 1])?.0).map(|w| w.missing_type);
        Ok(ensure(
            class(&[2, 1, 1])? == MatchingClass::Almost
                && class(&[4, 1, 1, 1, 1])? == MatchingClass::Neither
                && class(&[3, 2, 2])? == MatchingClass::Perfect
                && w == Some(p("2,2,2,2,1")),
            || "classification mismatch".into(),
        ))
    }));
    out.push(check("S(1,1,1) short-legs witness (2,2)", || {
        let w = short_legs_witness(&spider(&[1, 1, 1])?.0).map(|w| w.missing_type);
        Ok(ensure(w == Some(p("2,2")), || format!("got {w:?}")))
    }));
    out.push(check("S(6,2,1,1) missing (4,4,3) by induction", || {
        let (spec, g) = spider(&[6, 2, 1, 1])?;
        let w = induction_witness(&spec).map(|w| w.missing_type);
        Ok(ensure(w == Some(p("4,4,3")) && !has_connected_partition(&g, &p("4,4,3"))?, || format!("got {w:?}")))
    }));
    out.push(check("S(2+4a,2,1,1) missing (4^(a+1),3), 0 <= a <= 2", || {
        for a in 0..=2 {
            let (spec, g) = spider(&[2 + 4 * a, 2, 1, 1])?;
            let mut sizes = vec![4; a + 1];
            sizes.push(3);
            let want = Partition::from_sizes(sizes);
            if induction_witness(&spec).map(|w| w.missing_type) != Some(want.clone())
                || has_connected_partition(&g, &want)?
            {
                return Ok(Err(spec.to_string()));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("S(8,2,2,1) missing (4,4,3,3) by the first quotient rule", || {
        let (spec, g) = spider(&[8, 2, 2, 1])?;
        let w = quotient_witness_1(&spec);
        let d = spider_e_negativity_decision(&spec);
        Ok(ensure(
            w.map(|w| w.missing_type) == Some(p("4,4,3,3"))
                && d.map(|d| d.rule) == Some(SpiderRule::Quotient1)
                && !has_connected_partition(&g, &p("4,4,3,3"))?
                && !full_report(&g)?.e_positive,
            || "witness mismatch".into(),
        ))
    }));
    out.push(check("S(13,6,4,1,1) missing (9,9,8) by the third quotient rule, i = 2", || {
        let (spec, g) = spider(&[13, 6, 4, 1, 1])?;
        let w = quotient_witness_3(&spec, 2).map(|w| w.missing_type);
        Ok(ensure(w == Some(p("9,9,8")) && !has_connected_partition(&g, &p("9,9,8"))?, || format!("got {w:?}")))
    }));
    out.push(check("S(6,4,1,1): no rule fires, yet not e-positive", || {
        let (spec, g) = spider(&[6, 4, 1, 1])?;
        Ok(ensure(
            spider_e_negativity_decision(&spec).is_none() && !expansion(&g, Basis::E)?.is_nonnegative(),
            || "rule fired or e-positive".into(),
        ))
    }));
    out.push(check("S(1,1,1,1) gets a witness; four odd legs rule out matchings", || {
        let (spec, g) = spider(&[1, 1, 1, 1])?;
        let d = spider_e_negativity_decision(&spec);
        Ok(ensure(
            d.is_some() && matching_witness(&spec).is_some() && matching_criterion(&g).is_some(),
            || "no witness".into(),
        ))
    }));

    out.push(check("[e_(n-m-1,m+1)] X_S = -n (or -n/2), spiders with n <= 12", || {
        for n in 4..=12 {
            for legs in partitions_of(n - 1).into_iter().filter(|l| l.len() >= 3) {
                let m = legs.largest();
                if m >= n / 2 {
                    continue;
                }
                let g = make_spider(&SpiderSpec::new(legs.clone())?)?;
                let c = expansion(&g, Basis::E)?.coeff(&Partition::from_sizes([n - m - 1, m + 1]));
                let want = if m + 1 == n - m - 1 { Rational::new(BigInt::from(-(n as i64)), BigInt::from(2)) } else { int(-(n as i64)) };
                if c != want {
                    return Ok(Err(format!("S{legs}: {c}")));
                }
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("[e_(r-1,2,2)] X_S(r,1,1) = -(r-1), 3 <= r <= 10", || {
        for r in 3..=10 {
            let (_, g) = spider(&[r, 1, 1])?;
            let c = expansion(&g, Basis::E)?.coeff(&Partition::from_sizes([r - 1, 2, 2]));
            if c != int(1 - r as i64) {
                return Ok(Err(format!("r = {r}: {c}")));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("[e_(3,2^(k+l))] X_S(2k,2l,1,1) = -2(r+s)+7, n <= 15", || {
        for k in 1..=6 {
            for l in 1..=k {
                let (r, s) = (2 * k, 2 * l);
                if r + s + 3 > 15 {
                    continue;
                }
                let (_, g) = spider(&[r, s, 1, 1])?;
                let mut sizes = vec![3];
                sizes.extend(std::iter::repeat_n(2, k + l));
                let c = expansion(&g, Basis::E)?.coeff(&Partition::from_sizes(sizes));
                if c != int(7 - 2 * (r + s) as i64) {
                    return Ok(Err(format!("S({r},{s},1,1): {c}")));
                }
            }
        }
        Ok(Ok(()))
    }));
    out
}
