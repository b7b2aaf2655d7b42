//! Hypothesis check ("every 2-maximal subgroup is Hall") and verification of
//! the structural conclusions that follow from it, with witnesses.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{gcd, PrimePowerFactorization};
use crate::constructors::{psl2, GroupSpec};
use crate::error::Result;
use crate::exec::{with_jobs, Exec};
use crate::lattice::{enumerate_subgroups, Lattice, SubgroupId};
use crate::permcore::{Caps, PermGroup};
use crate::structure::{
    gaschutz_subgroups, hall_subgroups, has_sylow_tower, is_elementary_abelian, is_hall,
    is_solvable, is_supersolvable, pi_part, supersolvable_residual, sylow_subgroup, SigmaTau,
};

/// Arithmetic certificate that a 2-maximal subgroup is not Hall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HallWitness {
    pub h_order: u64,
    pub m_order: u64,
    pub index: u64,
    pub gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisResult {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<HallWitness>,
}

/// The first non-Hall `H` (canonical order) among all 2-maximal pairs `(H, M)`.
pub fn check_hypothesis(lattice: &Lattice) -> HypothesisResult {
    let n = lattice.group_order();
    let witness = lattice
        .two_maximals()
        .into_iter()
        .find(|&(h, _)| !is_hall(lattice, h))
        .map(|(h, m)| {
            let index = n / lattice.order(h);
            HallWitness {
                h_order: lattice.order(h),
                m_order: lattice.order(m),
                index,
                gcd: gcd(lattice.order(h), index),
            }
        });
    HypothesisResult {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    PrimaryGroup,
    HypothesisFails,
    SupersolvableBranch,
    MainBranch,
    Skipped,
}

impl Applicability {
    pub fn as_str(self) -> &'static str {
        match self {
            Applicability::PrimaryGroup => "primary-group",
            Applicability::HypothesisFails => "hypothesis-fails",
            Applicability::SupersolvableBranch => "supersolvable-branch",
            Applicability::MainBranch => "main-branch",
            Applicability::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pass {
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerCheck {
    pub pass: bool,
    pub ordering: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonHallMaximal {
    pub order: u64,
    pub index: u64,
    pub gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalsHallCheck {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NonHallMaximal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaschutzCheck {
    pub pass: bool,
    pub hall_sigma_order: u64,
    pub gaschutz_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualCheck {
    pub pass: bool,
    pub residual_order: u64,
    pub tau_part: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusions {
    pub sylow_tower: TowerCheck,
    pub maximals_hall: MaximalsHallCheck,
    pub sylows_elementary_abelian: Pass,
    pub sigma_ge_2: Pass,
    pub gsigma_in_gaschutz: GaschutzCheck,
    pub tau_ge_1: Pass,
    pub residual_is_hall_tau: ResidualCheck,
}

impl Conclusions {
    fn failures(&self) -> usize {
        [
            self.sylow_tower.pass,
            self.maximals_hall.pass,
            self.sylows_elementary_abelian.pass,
            self.sigma_ge_2.pass,
            self.gsigma_in_gaschutz.pass,
            self.tau_ge_1.pass,
            self.residual_is_hall_tau.pass,
        ]
        .iter()
        .filter(|&&p| !p)
        .count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedFacts {
    pub solvable: bool,
}

/// Per-group verdict. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub pi: Vec<u64>,
    pub sigma: Vec<u64>,
    pub tau: Vec<u64>,
    pub applicability: Applicability,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<HypothesisResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusions: Option<Conclusions>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squarefree: Option<Pass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<DerivedFacts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    /// Rows of the 2×2 matrix acting on the plane, for affine constructions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acting_matrix: Option<[[u64; 2]; 2]>,
}

impl TheoremReport {
    /// Number of failed conclusions in an applicable branch. Anything above
    /// zero is a counterexample to the implication being checked.
    pub fn violations(&self) -> usize {
        let concl = self.conclusions.as_ref().map_or(0, Conclusions::failures);
        let square = usize::from(matches!(self.squarefree, Some(Pass { pass: false })));
        let solv = usize::from(matches!(
            self.derived,
            Some(DerivedFacts { solvable: false })
        ));
        concl + square + solv
    }

    fn skipped(name: &str, group: &PermGroup, reason: String) -> Self {
        let order = u64::try_from(group.order()).unwrap_or(u64::MAX);
        let st = SigmaTau::of_order(order.max(1));
        TheoremReport {
            name: name.to_string(),
            order,
            degree: group.degree(),
            pi: st.pi().into_iter().collect(),
            sigma: st.sigma.into_iter().collect(),
            tau: st.tau.into_iter().collect(),
            applicability: Applicability::Skipped,
            hypothesis: None,
            conclusions: None,
            squarefree: None,
            derived: None,
            skipped_reason: Some(reason),
            acting_matrix: None,
        }
    }
}

/// Builds the lattice and checks the hypothesis and every applicable conclusion.
pub fn verify_theorem(
    name: &str,
    group: &PermGroup,
    caps: Caps,
    exec: Exec,
) -> Result<TheoremReport> {
    let lattice = enumerate_subgroups(group, caps, exec)?;
    verify_with_lattice(name, &lattice)
}

pub fn verify_with_lattice(name: &str, lattice: &Lattice) -> Result<TheoremReport> {
    let order = lattice.group_order();
    let st = SigmaTau::of_order(order);
    let pi: Vec<u64> = st.pi().into_iter().collect();
    let mut report = TheoremReport {
        name: name.to_string(),
        order,
        degree: lattice.group().degree(),
        pi: pi.clone(),
        sigma: st.sigma.iter().copied().collect(),
        tau: st.tau.iter().copied().collect(),
        applicability: Applicability::PrimaryGroup,
        hypothesis: None,
        conclusions: None,
        squarefree: None,
        derived: None,
        skipped_reason: None,
        acting_matrix: None,
    };
    let hypothesis = check_hypothesis(lattice);
    let holds = hypothesis.holds;
    report.hypothesis = Some(hypothesis);
    if pi.len() < 2 {
        return Ok(report);
    }
    if !holds {
        report.applicability = Applicability::HypothesisFails;
        return Ok(report);
    }
    if is_supersolvable(lattice) {
        report.applicability = Applicability::SupersolvableBranch;
        let square_free = PrimePowerFactorization::of(order).is_square_free();
        report.squarefree = Some(Pass {
            pass: square_free && st.tau.is_empty(),
        });
        return Ok(report);
    }
    report.applicability = Applicability::MainBranch;
    report.derived = Some(DerivedFacts {
        solvable: is_solvable(lattice),
    });
    report.conclusions = Some(main_branch_conclusions(lattice, &st)?);
    Ok(report)
}

fn main_branch_conclusions(lattice: &Lattice, st: &SigmaTau) -> Result<Conclusions> {
    let order = lattice.group_order();
    let ordering = has_sylow_tower(lattice)?;
    let sylow_tower = TowerCheck {
        pass: ordering.is_some(),
        ordering: ordering.unwrap_or_default(),
    };

    let non_hall = lattice
        .maximal_subgroups_of(lattice.top())
        .iter()
        .copied()
        .find(|&m| !is_hall(lattice, m));
    let maximals_hall = MaximalsHallCheck {
        pass: non_hall.is_none(),
        witness: non_hall.map(|m| {
            let index = order / lattice.order(m);
            NonHallMaximal {
                order: lattice.order(m),
                index,
                gcd: gcd(lattice.order(m), index),
            }
        }),
    };

    let mut sylows_ea = true;
    for p in st.pi() {
        sylows_ea &= is_elementary_abelian(lattice, sylow_subgroup(lattice, p)?);
    }

    let gaschutz = gaschutz_subgroups(lattice)?;
    let gsigma_in_gaschutz = sigma_in_gaschutz(lattice, &st.sigma, &gaschutz);

    let residual = supersolvable_residual(lattice)?;
    let tau_part = pi_part(order, &st.tau);
    let residual_is_hall_tau = ResidualCheck {
        pass: lattice.order(residual) == tau_part && is_hall(lattice, residual),
        residual_order: lattice.order(residual),
        tau_part,
    };

    Ok(Conclusions {
        sylow_tower,
        maximals_hall,
        sylows_elementary_abelian: Pass { pass: sylows_ea },
        sigma_ge_2: Pass {
            pass: st.sigma.len() >= 2,
        },
        gsigma_in_gaschutz,
        tau_ge_1: Pass {
            pass: !st.tau.is_empty(),
        },
        residual_is_hall_tau,
    })
}

/// Fixes the first Hall σ-subgroup and looks for a Gaschütz subgroup above it;
/// falls back to the remaining Hall σ-subgroups before reporting failure.
fn sigma_in_gaschutz(
    lattice: &Lattice,
    sigma: &BTreeSet<u64>,
    gaschutz: &[SubgroupId],
) -> GaschutzCheck {
    let halls = hall_subgroups(lattice, sigma);
    let hall_sigma_order = pi_part(lattice.group_order(), sigma);
    for &h in &halls {
        if let Some(&w) = gaschutz.iter().find(|&&w| lattice.is_contained(h, w)) {
            return GaschutzCheck {
                pass: true,
                hall_sigma_order,
                gaschutz_order: Some(lattice.order(w)),
            };
        }
    }
    GaschutzCheck {
        pass: false,
        hall_sigma_order,
        gaschutz_order: gaschutz.first().map(|&w| lattice.order(w)),
    }
}

/// A 2-maximal pair in a simple group whose lower member is not Hall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub group: String,
    pub pass: bool,
    pub method: &'static str,
    pub group_order: u64,
    pub m_order: u64,
    pub h_order: u64,
    pub index: u64,
    pub gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub checks: Vec<WitnessCheck>,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn lattice_witness(q: usize, m_order: u64, h_order: u64, exec: Exec) -> Result<WitnessCheck> {
    let g = psl2(q)?;
    let lattice = enumerate_subgroups(&g, Caps::default(), exec)?;
    let n = lattice.group_order();
    let found = lattice
        .two_maximals()
        .into_iter()
        .find(|&(h, m)| lattice.order(h) == h_order && lattice.order(m) == m_order);
    let index = n / h_order;
    Ok(WitnessCheck {
        group: format!("PSL(2,{q})"),
        pass: found.is_some() && gcd(h_order, index) != 1,
        method: "lattice",
        group_order: n,
        m_order,
        h_order,
        index,
        gcd: gcd(h_order, index),
    })
}

/// |PSL(5,2)| = 2¹⁰·3²·5·7·31; the pair M = 2⁶:(S₃ × PSL(3,2)) > H = 2⁶:(Z₃ × PSL(3,2)).
pub fn psl52_witness() -> WitnessCheck {
    // over the field of order 2, PSL(5,2) = SL(5,2) = GL(5,2)
    let group_order: u64 = (0..5).map(|i| (1u64 << 5) - (1u64 << i)).product();
    let m_order = 64 * 6 * 168;
    let h_order = 64 * 3 * 168;
    let index = group_order / h_order;
    let from_factors = h_order == (1 << 9) * 9 * 7 && index == 2 * 5 * 31;
    WitnessCheck {
        group: "PSL(5,2)".into(),
        pass: from_factors
            && group_order == 9_999_360
            && group_order.is_multiple_of(m_order)
            && m_order / h_order == 2
            && gcd(h_order, index) != 1,
        method: "arithmetic",
        group_order,
        m_order,
        h_order,
        index,
        gcd: gcd(h_order, index),
    }
}

/// The three non-Hall 2-maximal witnesses for the simple groups that the
/// hypothesis rules out.
pub fn verify_psl_witnesses(exec: Exec) -> Result<WitnessReport> {
    Ok(WitnessReport {
        checks: vec![
            lattice_witness(7, 24, 12, exec)?,
            lattice_witness(11, 12, 6, exec)?,
            psl52_witness(),
        ],
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub applicable: usize,
    pub main_branch: usize,
    pub supersolvable_branch: usize,
    pub hypothesis_fails: usize,
    pub primary: usize,
    pub skipped: usize,
    pub violations: usize,
}

impl ScanSummary {
    fn add(&mut self, r: &TheoremReport) {
        self.total += 1;
        match r.applicability {
            Applicability::MainBranch => {
                self.main_branch += 1;
                self.applicable += 1;
            }
            Applicability::SupersolvableBranch => {
                self.supersolvable_branch += 1;
                self.applicable += 1;
            }
            Applicability::HypothesisFails => self.hypothesis_fails += 1,
            Applicability::PrimaryGroup => self.primary += 1,
            Applicability::Skipped => self.skipped += 1,
        }
        self.violations += r.violations();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub reports: Vec<TheoremReport>,
    pub summary: ScanSummary,
}

/// Verifies each spec, `jobs` groups at a time. Over-cap groups become skipped
/// reports; other construction or verification errors are returned.
pub fn scan_corpus(specs: &[GroupSpec], caps: Caps, jobs: usize) -> Result<ScanResult> {
    let results: Vec<Result<TheoremReport>> = with_jobs(jobs, || {
        let exec = if jobs > 1 {
            Exec::Parallel
        } else {
            Exec::Sequential
        };
        exec.map(specs, |spec| {
            let group = spec.build(caps)?;
            let mut report = match verify_theorem(&spec.name, &group, caps, Exec::Sequential) {
                Err(e) if e.is_cap() => TheoremReport::skipped(&spec.name, &group, e.to_string()),
                other => other?,
            };
            report.acting_matrix = spec.matrix().map(|m| m.entries);
            Ok(report)
        })
    });
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut summary = ScanSummary::default();
    reports.iter().for_each(|r| summary.add(r));
    Ok(ScanResult { reports, summary })
}
