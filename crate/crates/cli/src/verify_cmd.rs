//! The `verify` subcommand: named check suites with one PASS/FAIL/SKIP line
//! per check. Exit 0 iff nothing failed (skips do not fail).

use crate::run::Outcome;
use liedim::classify::{bound_value, classify_bounded, pq_catalogue};
use liedim::duality::{closed_form_conditions, duality_indicator, DualityIndicator};
use liedim::heightmin::{
    composite_factor_inequality_holds, find_injection, verify_certificate,
    verify_fundamental_monotone, verify_min_at_height,
};
use liedim::rootsys::weights_of_height;
use liedim::tables::{matching_pq_row, pq_rows};
use liedim::{Family, LieError, LieType, RootSystem};
use num::BigInt;

struct Suite {
    lines: Vec<String>,
    failures: usize,
}

impl Suite {
    fn new() -> Self {
        Suite {
            lines: Vec::new(),
            failures: 0,
        }
    }

    fn pass(&mut self, name: &str) {
        self.lines.push(format!("PASS {name}"));
    }

    fn fail(&mut self, name: &str, why: &str) {
        self.lines.push(format!("FAIL {name}: {why}"));
        self.failures += 1;
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.lines.push(format!("SKIP {name}: {why}"));
    }

    fn outcome(mut self) -> Outcome {
        self.lines.push(format!(
            "{} checks, {} failures",
            self.lines.len(),
            self.failures
        ));
        Outcome {
            text: self.lines.join("\n"),
            exit: if self.failures == 0 { 0 } else { 1 },
        }
    }
}

fn types_up_to(max_rank: usize, include_big_e: bool) -> Vec<LieType> {
    let mut v = Vec::new();
    for n in 2..=max_rank {
        if let Ok(t) = LieType::new(Family::A, n) {
            v.push(t);
        }
    }
    for n in 3..=max_rank {
        if let Ok(t) = LieType::new(Family::B, n) {
            v.push(t);
        }
    }
    for n in 2..=max_rank {
        if let Ok(t) = LieType::new(Family::C, n) {
            v.push(t);
        }
    }
    for n in 4..=max_rank {
        if let Ok(t) = LieType::new(Family::D, n) {
            v.push(t);
        }
    }
    v.push(LieType::new(Family::G, 2).unwrap());
    if max_rank >= 4 {
        v.push(LieType::new(Family::F, 4).unwrap());
    }
    if max_rank >= 6 {
        v.push(LieType::new(Family::E, 6).unwrap());
    }
    if include_big_e && max_rank >= 7 {
        v.push(LieType::new(Family::E, 7).unwrap());
    }
    if include_big_e && max_rank >= 8 {
        v.push(LieType::new(Family::E, 8).unwrap());
    }
    v
}

pub fn run(suite: &str, max_rank: usize, max_height: u32, cap: u64) -> Result<Outcome, String> {
    match suite {
        "theorem1" => Ok(theorem1(max_rank, max_height, cap)),
        "lemma2" => Ok(lemma2(max_rank, max_height.max(5))),
        "lemma33" => Ok(lemma33()),
        "bounds" => Ok(bounds(max_rank)),
        "pq" => Ok(pq(max_rank, max_height.max(6), cap)),
        "duality" => Ok(duality(max_rank, max_height)),
        other => Err(format!(
            "unknown suite {other:?} (expected theorem1, lemma2, lemma33, bounds, pq or duality)"
        )),
    }
}

fn theorem1(max_rank: usize, max_height: u32, cap: u64) -> Outcome {
    let mut s = Suite::new();
    for lt in types_up_to(max_rank, true) {
        let rs = RootSystem::build(lt).expect("valid type");
        for t in 1..=max_height {
            let name = format!("theorem1 {lt} t={t}");
            match verify_min_at_height(&rs, t, cap as u128) {
                Ok(chk) if chk.pass => s.pass(&name),
                Ok(chk) => s.fail(&name, &format!("{} offenders", chk.offenders.len())),
                Err(LieError::EnumerationCap { required, cap }) => {
                    s.skip(&name, &format!("needs {required} > cap {cap}"))
                }
                Err(e) => s.fail(&name, &e.to_string()),
            }
        }
    }
    s.outcome()
}

fn lemma2(max_rank: usize, t_max: u32) -> Outcome {
    let mut s = Suite::new();
    for lt in types_up_to(max_rank, true) {
        let rs = RootSystem::build(lt).expect("valid type");
        for j in 1..=rs.rank() {
            let name = format!("lemma2 {lt} j={j}");
            match verify_fundamental_monotone(&rs, j, t_max) {
                Ok(true) => {}
                Ok(false) => {
                    s.fail(&name, "dimension comparison failed");
                    continue;
                }
                Err(e) => {
                    s.fail(&name, &e.to_string());
                    continue;
                }
            }
            match find_injection(&rs, j) {
                Ok(cert) => match verify_certificate(&rs, &cert) {
                    Ok(()) => s.pass(&name),
                    Err(e) => s.fail(&name, &e.to_string()),
                },
                Err(e) => s.fail(&name, &e.to_string()),
            }
        }
    }
    s.outcome()
}

fn lemma33() -> Outcome {
    let mut s = Suite::new();
    for n in 3..=20 {
        let ok = (0..=100).all(|t| composite_factor_inequality_holds(n, t));
        let name = format!("lemma33 n={n} t=0..100");
        if ok {
            s.pass(&name);
        } else {
            s.fail(&name, "inequality violated");
        }
    }
    s.outcome()
}

fn bounds(max_rank: usize) -> Outcome {
    let mut s = Suite::new();
    // closed-form cross checks of the bound values
    for lt in types_up_to(max_rank.max(4), false) {
        let rs = RootSystem::build(lt).expect("valid type");
        let n = rs.rank() as i64;
        let name = format!("bounds {lt}");
        let mut ok = true;
        for t in 0..=3u32 {
            for w in weights_of_height(rs.rank(), t) {
                let b = bound_value(&rs, &w).expect("bound");
                let a = w.coeffs();
                let expected: Option<BigInt> = match lt.family() {
                    Family::A if n >= 2 => Some(BigInt::from(n + t as i64)),
                    Family::C => Some(BigInt::from(2 * n + 2 * t as i64)),
                    Family::B => Some(BigInt::from(
                        2 * n - 2 + 2 * t as i64
                            - a[0] as i64
                            - a[rs.rank() - 1] as i64,
                    )),
                    Family::D => Some(BigInt::from(
                        2 * n - 3 + 2 * t as i64
                            - a[0] as i64
                            - a[rs.rank() - 2] as i64
                            - a[rs.rank() - 1] as i64,
                    )),
                    _ => None,
                };
                if let Some(e) = expected {
                    if b.long_bound != e {
                        ok = false;
                    }
                }
                if lt.family() == Family::B {
                    let short = b.short_bound.expect("short bound for B");
                    if short - &b.long_bound != BigInt::from(1 + a[0] as i64) {
                        ok = false;
                    }
                }
            }
        }
        if ok {
            s.pass(&name);
        } else {
            s.fail(&name, "closed form mismatch");
        }
    }
    // catalog cutoff soundness
    for lt in types_up_to(max_rank.max(4), false) {
        if lt.rank() < 2 || (lt.family() == Family::A && lt.rank() == 2) {
            continue;
        }
        let name = format!("cutoff {lt}");
        match classify_bounded(lt) {
            Ok(c) => match c.cutoff {
                Some((_, min, env)) if min > env => s.pass(&name),
                Some(_) => s.fail(&name, "cutoff not sound"),
                None => s.fail(&name, "no cutoff recorded"),
            },
            Err(e) => s.fail(&name, &e.to_string()),
        }
    }
    s.outcome()
}

fn pq(max_rank: usize, max_height: u32, cap: u64) -> Outcome {
    let mut s = Suite::new();
    let rows = pq_rows();
    let capb = BigInt::from(cap);
    for lt in types_up_to(max_rank, true) {
        let rs = RootSystem::build(lt).expect("valid type");
        let name = format!("pq {lt}");
        match pq_catalogue(&rs, &capb, max_height) {
            Ok(entries) => {
                let bad: Vec<String> = entries
                    .iter()
                    .filter(|e| {
                        !(e.natural || e.clause.is_some())
                            || matching_pq_row(&rows, &e.module).is_none()
                    })
                    .map(|e| format!("{}", e.module.weight))
                    .collect();
                if bad.is_empty() {
                    s.pass(&name);
                } else {
                    s.fail(&name, &format!("unmatched {}", bad.join(" ")));
                }
            }
            Err(e) => s.fail(&name, &e.to_string()),
        }
    }
    s.outcome()
}

fn duality(max_rank: usize, max_height: u32) -> Outcome {
    let mut s = Suite::new();
    for lt in types_up_to(max_rank, true) {
        let rs = RootSystem::build(lt).expect("valid type");
        let name = format!("duality {lt}");
        let mut ok = true;
        for t in 0..=max_height.min(4) {
            for w in weights_of_height(rs.rank(), t) {
                let ind = duality_indicator(&rs, &w);
                let (sd, sy) = closed_form_conditions(lt, &w);
                if let Some(sd) = sd {
                    if ind.is_self_dual() != sd {
                        ok = false;
                    }
                }
                if ind.is_self_dual() && (ind == DualityIndicator::Symplectic) != sy {
                    ok = false;
                }
            }
        }
        if ok {
            s.pass(&name);
        } else {
            s.fail(&name, "closed-form disagreement");
        }
    }
    s.outcome()
}
