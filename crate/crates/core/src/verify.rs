//! Named invariant suites run by `altpower verify`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::arith::{factorial, gcd};
use crate::census::{
    brute_force_counts, closed_form_counts, edge_count_formula, mu_elements, order_graph_verdict,
    procedure_count_with_census, structure_report, BigCount, Selection, SMALL_N_TABLE,
};
use crate::error::{Error, Result};
use crate::graph::{
    components, order_graph, power_type_graph, proper_power_graph, quotient_power_graph, Limits,
};
use crate::partition::enumerate_types;
use crate::perm::enumerate_alternating;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    CrosscheckPtype,
    Structure,
    Edges,
    Algebra,
    Procedure,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Table1,
        Suite::CrosscheckPtype,
        Suite::Structure,
        Suite::Edges,
        Suite::Algebra,
        Suite::Procedure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::CrosscheckPtype => "crosscheck-ptype",
            Suite::Structure => "structure",
            Suite::Edges => "edges",
            Suite::Algebra => "algebra",
            Suite::Procedure => "procedure",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Table1 => 10,
            Suite::CrosscheckPtype | Suite::Structure => 40,
            Suite::Edges => 8,
            Suite::Algebra => 12,
            Suite::Procedure => 9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub seed: u64,
    pub limits: Limits,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn run(&mut self, name: String, f: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            name,
            passed,
            detail,
            elapsed: start.elapsed(),
        });
    }
}

fn compare<T: PartialEq + fmt::Debug>(got: T, want: T) -> (bool, String) {
    let ok = got == want;
    (ok, format!("got {got:?}, expected {want:?}"))
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let max_n = opts.max_n.unwrap_or(suite.default_max_n());
    let lim = &opts.limits;
    let mut rec = Recorder { checks: Vec::new() };
    match suite {
        Suite::Table1 => {
            for &(n, c0, ptype, order) in SMALL_N_TABLE.iter().filter(|r| r.0 <= max_n) {
                rec.run(format!("table1 n={n}"), || {
                    let r = brute_force_counts(n, lim)?;
                    Ok(compare(
                        (r.c0, r.c0_ptype, r.c0_order),
                        (BigCount::from(c0), ptype, order),
                    ))
                });
            }
        }
        Suite::CrosscheckPtype => {
            for n in 11..=max_n {
                rec.run(format!("crosscheck-ptype n={n}"), || {
                    let cf = closed_form_counts(n)?;
                    let t = components(&power_type_graph(n, lim)?).component_count() as u32;
                    let o = components(&order_graph(n, lim)?).component_count() as u32;
                    let verdict = order_graph_verdict(n as u64)?;
                    Ok(compare((t, o, o), (cf.c0_ptype, cf.c0_order, verdict)))
                });
            }
        }
        Suite::Structure => {
            for n in 11..=max_n {
                rec.run(format!("structure n={n}"), || {
                    let r = structure_report(n, lim)?;
                    Ok((
                        true,
                        format!(
                            "{} components, isolated {:?}",
                            r.component_count, r.isolated_types
                        ),
                    ))
                });
            }
        }
        Suite::Edges => {
            for n in 4..=max_n {
                rec.run(format!("edges n={n}"), || {
                    let g = proper_power_graph(n, lim)?;
                    Ok(compare(
                        BigCount::from(g.edge_count() as u64),
                        edge_count_formula(n)?,
                    ))
                });
            }
        }
        Suite::Algebra => algebra(&mut rec, max_n),
        Suite::Procedure => {
            for n in 3..=max_n {
                rec.run(format!("procedure n={n}"), || {
                    let q = quotient_power_graph(n, lim)?;
                    let census = components(&q);
                    let ptype = components(&power_type_graph(n, lim)?).component_count();
                    let want = (BigCount::from(census.component_count() as u64), ptype);
                    let base =
                        procedure_count_with_census(n, &q, &census, Selection::Lexicographic)?;
                    if (base.total.clone(), base.steps) != want {
                        return Ok(compare((base.total, base.steps), want));
                    }
                    for k in 0..20u64 {
                        let sel = Selection::Seeded(opts.seed.wrapping_add(k));
                        let r = procedure_count_with_census(n, &q, &census, sel)?;
                        if (r.total.clone(), r.steps) != want {
                            return Ok(compare((r.total, r.steps), want));
                        }
                    }
                    Ok((true, format!("{} in {} steps", want.0, want.1)))
                });
            }
        }
    }
    Ok(rec.checks)
}

fn algebra(rec: &mut Recorder, max_n: usize) {
    rec.run(format!("type power gcd reduction n<={max_n}"), || {
        for n in 1..=max_n {
            for t in enumerate_types(n, false, false) {
                let o = t.order();
                for a in 1..=2 * o {
                    let p = t.power(a);
                    if p != t.power(gcd(a, o)) || p.n() != n || p.order() != o / gcd(a, o) {
                        return Ok((false, format!("{t}^{a} = {p}")));
                    }
                }
            }
        }
        Ok((true, String::new()))
    });
    let perm_n = max_n.min(7);
    rec.run(format!("permutation-level agreement n<={perm_n}"), || {
        for n in 1..=perm_n {
            for x in enumerate_alternating(n, perm_n)? {
                let t = x.cycle_type();
                if t.is_alternating() != x.is_even() || t.order() != x.order() {
                    return Ok((false, format!("{x:?}")));
                }
                for a in 0..=2 * x.order() {
                    if x.power(a).cycle_type() != t.power(a) {
                        return Ok((false, format!("{x:?} ^ {a}")));
                    }
                }
            }
        }
        Ok((true, String::new()))
    });
    rec.run("sum of mu_T equals n!/2 for n<=20".into(), || {
        for n in 2..=20usize {
            let total: BigCount = enumerate_types(n, true, false)
                .iter()
                .map(mu_elements)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .sum();
            if total.value() != &(factorial(n as u64) / BigUint::from(2u8)) {
                return Ok((false, format!("n = {n}: {total}")));
            }
        }
        Ok((true, String::new()))
    });
}
