//! Text renderings. Every number here also appears in the JSON form.

use std::fmt::Write;

use h2m_core::verifier::{Conclusions, ScanResult, TheoremReport, WitnessReport};
use h2m_core::Lattice;
use serde::Serialize;

fn set(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn report(r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: order {}, degree {}", r.name, r.order, r.degree);
    let _ = writeln!(
        s,
        "  pi = {}  sigma = {}  tau = {}",
        set(&r.pi),
        set(&r.sigma),
        set(&r.tau)
    );
    if let Some(m) = r.acting_matrix {
        let _ = writeln!(s, "  acting matrix = {m:?}");
    }
    let _ = writeln!(s, "  applicability: {}", r.applicability.as_str());
    if let Some(h) = &r.hypothesis {
        match &h.witness {
            None => {
                let _ = writeln!(s, "  hypothesis: holds");
            }
            Some(w) => {
                let _ = writeln!(
                    s,
                    "  hypothesis: fails, |H| = {} maximal in |M| = {}, index {}, gcd {}",
                    w.h_order, w.m_order, w.index, w.gcd
                );
            }
        }
    }
    if let Some(sq) = &r.squarefree {
        let _ = writeln!(s, "  square-free order: {}", verdict(sq.pass));
    }
    if let Some(d) = &r.derived {
        let _ = writeln!(s, "  solvable: {}", verdict(d.solvable));
    }
    if let Some(c) = &r.conclusions {
        conclusions(&mut s, c);
    }
    if let Some(reason) = &r.skipped_reason {
        let _ = writeln!(s, "  skipped: {reason}");
    }
    s
}

fn conclusions(s: &mut String, c: &Conclusions) {
    let ordering: Vec<String> = c.sylow_tower.ordering.iter().map(u64::to_string).collect();
    let _ = writeln!(
        s,
        "  sylow tower: {} (ordering {})",
        verdict(c.sylow_tower.pass),
        ordering.join(", ")
    );
    match &c.maximals_hall.witness {
        None => {
            let _ = writeln!(
                s,
                "  maximal subgroups Hall: {}",
                verdict(c.maximals_hall.pass)
            );
        }
        Some(w) => {
            let _ = writeln!(
                s,
                "  maximal subgroups Hall: FAIL (order {}, index {}, gcd {})",
                w.order, w.index, w.gcd
            );
        }
    }
    let _ = writeln!(
        s,
        "  Sylow subgroups elementary abelian: {}",
        verdict(c.sylows_elementary_abelian.pass)
    );
    let _ = writeln!(s, "  |sigma| >= 2: {}", verdict(c.sigma_ge_2.pass));
    let g = &c.gsigma_in_gaschutz;
    let gaschutz = g
        .gaschutz_order
        .map_or("none".to_string(), |o| o.to_string());
    let _ = writeln!(
        s,
        "  Hall sigma-subgroup (order {}) in a Gaschütz subgroup (order {}): {}",
        g.hall_sigma_order,
        gaschutz,
        verdict(g.pass)
    );
    let _ = writeln!(s, "  |tau| >= 1: {}", verdict(c.tau_ge_1.pass));
    let r = &c.residual_is_hall_tau;
    let _ = writeln!(
        s,
        "  supersolvable residual (order {}) is a Hall tau-subgroup (order {}): {}",
        r.residual_order,
        r.tau_part,
        verdict(r.pass)
    );
}

pub fn scan(result: &ScanResult) -> String {
    let mut s = String::new();
    let width = result
        .reports
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(0);
    for r in &result.reports {
        let _ = writeln!(
            s,
            "{:<width$}  order {:>6}  {:<21} violations {}",
            r.name,
            r.order,
            r.applicability.as_str(),
            r.violations()
        );
    }
    let m = &result.summary;
    let _ = writeln!(
        s,
        "total {}  applicable {} (main-branch {}, supersolvable-branch {})  hypothesis-fails {}  primary {}  skipped {}  violations {}",
        m.total,
        m.applicable,
        m.main_branch,
        m.supersolvable_branch,
        m.hypothesis_fails,
        m.primary,
        m.skipped,
        m.violations
    );
    s
}

pub fn witnesses(w: &WitnessReport) -> String {
    let mut s = String::new();
    for c in &w.checks {
        let _ = writeln!(
            s,
            "{} [{}]: |G| = {}, |M| = {}, |H| = {}, |G : H| = {}, gcd = {}: {}",
            c.group,
            c.method,
            c.group_order,
            c.m_order,
            c.h_order,
            c.index,
            c.gcd,
            verdict(c.pass)
        );
    }
    s
}

#[derive(Serialize)]
pub struct SubgroupEntry {
    id: usize,
    order: u64,
    index: u64,
    class: usize,
    normal: bool,
    maximals: Vec<usize>,
    generators: Vec<String>,
}

#[derive(Serialize)]
pub struct LatticeDump {
    name: String,
    order: u64,
    degree: usize,
    subgroup_count: usize,
    class_count: usize,
    subgroups: Vec<SubgroupEntry>,
}

impl LatticeDump {
    pub fn new(name: &str, l: &Lattice) -> Self {
        let n = l.group_order();
        let subgroups = l
            .ids()
            .map(|h| SubgroupEntry {
                id: h.0,
                order: l.order(h),
                index: n / l.order(h),
                class: l.class_of(h),
                normal: l.is_normal(h, l.top()).expect("inside the parent"),
                maximals: l.maximal_subgroups_of(h).iter().map(|m| m.0).collect(),
                generators: l
                    .generator_permutations(h)
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
            })
            .collect();
        LatticeDump {
            name: name.to_string(),
            order: n,
            degree: l.group().degree(),
            subgroup_count: l.len(),
            class_count: l.conjugacy_classes_of_subgroups().len(),
            subgroups,
        }
    }
}

pub fn lattice(name: &str, l: &Lattice) -> String {
    let dump = LatticeDump::new(name, l);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}: order {}, degree {}, {} subgroups in {} conjugacy classes",
        dump.name, dump.order, dump.degree, dump.subgroup_count, dump.class_count
    );
    for e in &dump.subgroups {
        let maximals: Vec<String> = e.maximals.iter().map(|m| format!("#{m}")).collect();
        let _ = writeln!(
            s,
            "#{} order {} index {} class {}{}  maximals [{}]  generators {}",
            e.id,
            e.order,
            e.index,
            e.class,
            if e.normal { " normal" } else { "" },
            maximals.join(" "),
            if e.generators.is_empty() {
                "()".to_string()
            } else {
                e.generators.join(" ")
            }
        );
    }
    s
}
