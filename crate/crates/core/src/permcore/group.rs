use std::sync::OnceLock;

use super::bsgs::Bsgs;
use super::permutation::Permutation;
use crate::error::{GroupError, Result};

/// Default cap on element enumeration.
pub const DEFAULT_MAX_ORDER: usize = 20_000;
/// Default cap on permutation degree (for constructors and quotients).
pub const DEFAULT_MAX_DEGREE: usize = 1024;

/// Resource limits shared by constructors, enumeration and quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_order: usize,
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: DEFAULT_MAX_ORDER,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Caps {
    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(GroupError::DegreeCapExceeded {
                degree,
                cap: self.max_degree,
            });
        }
        Ok(())
    }
}

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and then shared.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Bsgs>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter(
                "degree must be positive".into(),
            ));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.chain
            .get_or_init(|| Bsgs::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.bsgs().contains(p))
    }

    /// All elements in lexicographic order of image tables; the identity is first.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap as u128 {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        let mut elems = self.bsgs().enumerate();
        elems.sort_unstable();
        elems.dedup();
        Ok(elems)
    }

    /// Orbit of `point` under the generators, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = vec![point];
        while let Some(pt) = queue.pop() {
            for g in &self.generators {
                let img = g.apply(pt);
                if !seen[img] {
                    seen[img] = true;
                    queue.push(img);
                }
            }
        }
        Ok((0..self.degree).filter(|&i| seen[i]).collect())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }
}
