use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::permcore::{PermGroup, Permutation, Point};

/// Groups up to this order get a precomputed Cayley table.
const CAYLEY_LIMIT: usize = 2048;

/// Element rank: index into the canonical (lexicographically sorted) element list.
pub type Rank = u32;

/// Elements are identified by their images of the base points.
enum BaseIndex {
    Packed(FxHashMap<u64, Rank>),
    Wide(FxHashMap<Box<[Point]>, Rank>),
}

/// The canonical element list of a group with rank arithmetic.
pub struct ElementTable {
    elements: Vec<Permutation>,
    base: Vec<usize>,
    index: BaseIndex,
    inverse: Vec<Rank>,
    cayley: Option<Vec<Rank>>,
}

impl ElementTable {
    pub fn build(group: &PermGroup, cap: usize) -> Result<Self> {
        let elements = group.elements(cap)?;
        let base = group.bsgs().base();
        let index = if base.len() <= 4 {
            let mut m = FxHashMap::default();
            for (r, e) in elements.iter().enumerate() {
                m.insert(pack(&base, e), r as Rank);
            }
            BaseIndex::Packed(m)
        } else {
            let mut m = FxHashMap::default();
            for (r, e) in elements.iter().enumerate() {
                let key: Box<[Point]> = base.iter().map(|&b| e.images()[b]).collect();
                m.insert(key, r as Rank);
            }
            BaseIndex::Wide(m)
        };
        let mut table = ElementTable {
            elements,
            base,
            index,
            inverse: Vec::new(),
            cayley: None,
        };
        table.inverse = table
            .elements
            .iter()
            .map(|e| table.rank_of(&e.inverse()).expect("closed under inverses"))
            .collect();
        let n = table.len();
        if n <= CAYLEY_LIMIT {
            let mut cayley = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    cayley.push(table.mul_slow(a as Rank, b as Rank));
                }
            }
            table.cayley = Some(cayley);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, r: Rank) -> &Permutation {
        &self.elements[r as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Rank of a permutation, if it is an element. Only base images are inspected,
    /// so the caller must pass a group element for a meaningful answer.
    fn rank_by_base(&self, imgs: impl Iterator<Item = Point>) -> Option<Rank> {
        match &self.index {
            BaseIndex::Packed(m) => {
                let mut key = 0u64;
                for (i, x) in imgs.enumerate() {
                    key |= (x as u64) << (16 * i);
                }
                m.get(&key).copied()
            }
            BaseIndex::Wide(m) => {
                let key: Box<[Point]> = imgs.collect();
                m.get(&key).copied()
            }
        }
    }

    /// Exact rank lookup: base images locate the candidate, full comparison confirms it.
    pub fn rank_of(&self, p: &Permutation) -> Option<Rank> {
        if p.degree() != self.elements[0].degree() {
            return None;
        }
        let r = self.rank_by_base(self.base.iter().map(|&b| p.images()[b]))?;
        (self.elements[r as usize] == *p).then_some(r)
    }

    fn mul_slow(&self, a: Rank, b: Rank) -> Rank {
        let ea = self.elements[a as usize].images();
        let eb = self.elements[b as usize].images();
        self.rank_by_base(self.base.iter().map(|&x| eb[ea[x] as usize]))
            .expect("closed under multiplication")
    }

    /// Rank of `a` then `b`.
    #[inline]
    pub fn mul(&self, a: Rank, b: Rank) -> Rank {
        match &self.cayley {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Rank) -> Rank {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Rank, g: Rank) -> Rank {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: Rank, b: Rank) -> Rank {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn order_of(&self, a: Rank) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: Rank, e: u64) -> Rank {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }
}

fn pack(base: &[usize], e: &Permutation) -> u64 {
    base.iter()
        .enumerate()
        .fold(0u64, |k, (i, &b)| k | ((e.images()[b] as u64) << (16 * i)))
}
