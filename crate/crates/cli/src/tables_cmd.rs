//! The `tables` subcommand: regenerate a reference table, then diff against
//! the golden copy (bundled, or an explicit `--expect` file). Exit 3 on
//! mismatch.

use crate::run::Outcome;
use liedim::classify::{classify_bounded, is_semiprime};
use liedim::dims::weyl_dim;
use liedim::tables::{height_poly_products, pq_rows};
use liedim::{Family, LieType, RootSystem};
use num::{BigInt, BigRational};

const TABLE1_GOLD: &str = include_str!("../fixtures/table1.txt");
const TABLE3_GOLD: &str = include_str!("../fixtures/table3.txt");
const TABLE4_GOLD: &str = include_str!("../fixtures/table4.txt");
const TABLE6_GOLD: &str = include_str!("../fixtures/table6.txt");

pub fn run(
    id: u32,
    ranks: Option<&str>,
    cap: u64,
    max_rank: usize,
    expect: Option<&str>,
) -> Result<Outcome, String> {
    let (lo, hi) = match ranks {
        Some(r) => parse_ranks(r)?,
        None => (3, 12),
    };
    let (text, gold): (String, Option<&str>) = match id {
        1 => (render_table1(lo, hi)?, Some(TABLE1_GOLD)),
        3 => (render_table3(), Some(TABLE3_GOLD)),
        4 => (render_table4(), Some(TABLE4_GOLD)),
        6 => (render_table6(cap, max_rank)?, Some(TABLE6_GOLD)),
        other => return Err(format!("unknown table id {other} (expected 1, 3, 4 or 6)")),
    };
    // Diff against the requested golden copy. The bundled copies are frozen
    // at the default options; with non-default options only an explicit
    // --expect file is compared.
    let default_options = ranks.is_none() && cap == 1_000_000 && max_rank == 12;
    let golden: Option<String> = match expect {
        Some(path) => Some(
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        ),
        None if default_options => gold.map(|s| s.to_string()),
        None => None,
    };
    if let Some(golden) = golden {
        if golden.trim_end() != text.trim_end() {
            return Ok(Outcome {
                text: format!("{text}\nMISMATCH against golden table {id}"),
                exit: 3,
            });
        }
    }
    Ok(Outcome { text, exit: 0 })
}

fn parse_ranks(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split("..").collect();
    if parts.len() != 2 {
        return Err(format!("cannot parse rank range {s:?}; expected LO..HI"));
    }
    let lo = parts[0]
        .parse::<usize>()
        .map_err(|_| format!("bad rank {:?}", parts[0]))?;
    let hi = parts[1]
        .parse::<usize>()
        .map_err(|_| format!("bad rank {:?}", parts[1]))?;
    if lo > hi {
        return Err("empty rank range".into());
    }
    Ok((lo, hi))
}

fn render_table1(lo: usize, hi: usize) -> Result<String, String> {
    let mut out = vec![format!("# bounded catalog, classical ranks {lo}..{hi} + exceptional")];
    let mut types: Vec<LieType> = Vec::new();
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        for n in lo..=hi {
            if let Ok(t) = LieType::new(fam, n) {
                if !(fam == Family::A && n < 3) && !(fam == Family::C && n < 3) {
                    types.push(t);
                }
            }
        }
    }
    for s in ["E6", "E7", "E8", "F4", "G2"] {
        types.push(LieType::parse(s).unwrap());
    }
    for lt in types {
        let c = classify_bounded(lt).map_err(|e| e.to_string())?;
        for m in c.modules.iter().filter(|m| !m.weight.is_zero()) {
            out.push(format!(
                "{}  ({})  dim {}",
                lt,
                m.weight
                    .coeffs()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                m.dim
            ));
        }
    }
    Ok(out.join("\n"))
}

fn render_table3() -> String {
    let mut out = vec!["# symplectic fundamental weights".to_string()];
    out.push("A_n (n = 1 mod 4): (n+1)/2".into());
    out.push("B_n (n = 1, 2 mod 4): n".into());
    out.push("C_n: all odd i".into());
    out.push("D_n (n = 2 mod 4): n-1, n".into());
    out.push("E7: 2, 5, 7".into());
    for s in ["A5", "A9", "B5", "B6", "B7", "C4", "C5", "D6", "D8", "E7", "E6", "F4", "G2"] {
        let lt = LieType::parse(s).unwrap();
        let b = liedim::duality::symplectic_fundamentals(lt);
        let nodes: Vec<String> = b.nodes.iter().map(|n| n.to_string()).collect();
        out.push(format!(
            "{s}: {}",
            if nodes.is_empty() {
                "-".to_string()
            } else {
                nodes.join(",")
            }
        ));
    }
    out.join("\n")
}

fn factored(poly_factors: &[(i64, i64)]) -> String {
    poly_factors
        .iter()
        .map(|(m, h)| {
            if *m == 1 {
                format!("(t+{h})")
            } else {
                format!("({m}t+{h})")
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

fn render_table4() -> String {
    // factor lists mirroring tables::height_poly_products
    let factor_sets: Vec<(&str, Vec<(i64, i64)>)> = vec![
        ("G2", {
            let mut v: Vec<(i64, i64)> = (1..=4).map(|j| (1, j)).collect();
            v.push((2, 5));
            v
        }),
        ("F4", {
            let mut v: Vec<(i64, i64)> = (1..=10).map(|j| (1, j)).collect();
            v.extend((4..=7).map(|j| (1, j)));
            v.push((2, 11));
            v
        }),
        ("E6", {
            let mut v: Vec<(i64, i64)> = (1..=11).map(|j| (1, j)).collect();
            v.extend((4..=8).map(|j| (1, j)));
            v
        }),
        ("E7", {
            let mut v: Vec<(i64, i64)> = (1..=17).map(|j| (1, j)).collect();
            v.extend((5..=13).map(|j| (1, j)));
            v.push((1, 9));
            v
        }),
        ("E8", {
            let mut v: Vec<(i64, i64)> = (1..=28).map(|j| (1, j)).collect();
            v.extend((6..=23).map(|j| (1, j)));
            v.extend((10..=19).map(|j| (1, j)));
            v.push((2, 29));
            v
        }),
    ];
    let products = height_poly_products();
    let mut out = vec!["# minimal-height dimension polynomials: dim V(t l_s) = f(t)/f(0)".into()];
    for ((name, factors), (lt, poly, degree)) in factor_sets.iter().zip(products.iter()) {
        assert_eq!(name, &lt.to_string());
        // cross-check the factored rendering against the expanded product
        let rebuilt = liedim::poly::ExactPolynomial::from_linear_factors(
            factors.iter().map(|&(m, h)| {
                (
                    BigRational::from_integer(BigInt::from(m)),
                    BigRational::from_integer(BigInt::from(h)),
                )
            }),
        );
        assert_eq!(&rebuilt, poly);
        out.push(format!("{name}  degree {degree}  f(t) = {}", factored(factors)));
    }
    out.join("\n")
}

fn render_table6(cap: u64, max_rank: usize) -> Result<String, String> {
    let cap = BigInt::from(cap);
    let mut out = vec![format!(
        "# semiprime-dimension rows, dim cap {cap}, rank cap {max_rank}"
    )];
    for row in pq_rows() {
        let mut hits: Vec<String> = Vec::new();
        let upper = if row.smallest == 0 { 0 } else { 4 * max_rank as u64 + 8 };
        for param in row.smallest..=upper.max(row.smallest) {
            let Some((lt, w)) = (row.instantiate)(param) else {
                continue;
            };
            if lt.rank() > max_rank {
                continue;
            }
            let rs = RootSystem::build(lt).map_err(|e| e.to_string())?;
            let d = weyl_dim(&rs, &w).map_err(|e| e.to_string())?;
            if d > cap || is_semiprime(&d).is_none() {
                continue;
            }
            let (p, q) = is_semiprime(&d).unwrap();
            hits.push(format!(
                "{} ({}) dim {} = {}*{}",
                lt,
                w.coeffs()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                d,
                p,
                q
            ));
            if row.smallest == 0 {
                break; // sporadic rows have one member
            }
        }
        let duality = row
            .expected_duality
            .map(|d| d.as_str().to_string())
            .unwrap_or_else(|| "(unpinned)".into());
        out.push(format!("row {}  duality {}", row.id, duality));
        for h in hits {
            out.push(format!("  {h}"));
        }
    }
    Ok(out.join("\n"))
}
