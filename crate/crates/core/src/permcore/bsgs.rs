//! Deterministic Schreier–Sims.
//!
//! Base points are chosen as the smallest point moved by the strong generator
//! that forces a new level. No randomization, so the chain for a given
//! generator list is always the same.

use super::permutation::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    generators: Vec<Permutation>,
    /// Indexed by point: `(u, u^-1)` with `u` mapping the base point onto it.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            generators: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.orbit.clear();
        let id = Permutation::identity(degree);
        self.transversal[self.point] = Some((id.clone(), id));
        self.orbit.push(self.point);
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i];
            for s in &self.generators {
                let img = s.apply(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.compose(s);
                    let u_inv = u.inverse();
                    self.transversal[img] = Some((u, u_inv));
                    self.orbit.push(img);
                }
            }
            i += 1;
        }
    }

    fn rep(&self, pt: usize) -> Option<&(Permutation, Permutation)> {
        self.transversal[pt].as_ref()
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return bsgs;
        }
        let first = gens
            .iter()
            .filter_map(Permutation::first_moved_point)
            .min()
            .unwrap();
        let mut level = Level::new(first, degree);
        level.generators = gens;
        level.rebuild();
        bsgs.levels.push(level);
        bsgs.complete();
        bsgs
    }

    /// Holt's SCHREIERSIMS loop: test Schreier generators from the deepest
    /// level upward, descending again whenever a new strong generator appears.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].generators.clone();
            for &beta in &orbit {
                for x in &gens {
                    let (u_beta, _) = self.levels[lvl].rep(beta).unwrap();
                    let img = x.apply(beta);
                    let (_, u_img_inv) = self.levels[lvl].rep(img).unwrap();
                    let y = u_beta.compose(x).compose(u_img_inv);
                    if y.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip_from(y, lvl + 1);
                    let k = self.levels.len();
                    if j < k || !h.is_identity() {
                        if j == k {
                            let pt = h.first_moved_point().unwrap();
                            self.levels.push(Level::new(pt, self.degree));
                        }
                        for l in lvl + 1..=j {
                            self.levels[l].generators.push(h.clone());
                            self.levels[l].rebuild();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` starting at `start`; returns the residue and the level where sifting stopped.
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let img = g.apply(level.point);
            match level.rep(img) {
                Some((_, u_inv)) => g = g.compose(u_inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.strip_from(g.clone(), 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Every strong generator, deduplicated, in insertion order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Orbit point and coset representative pairs for one level.
    pub fn transversal(&self, level: usize) -> impl Iterator<Item = (usize, &Permutation)> {
        let lvl = &self.levels[level];
        lvl.orbit
            .iter()
            .map(move |&pt| (pt, &lvl.transversal[pt].as_ref().unwrap().0))
    }

    /// Saturates at `u128::MAX` for astronomically large groups.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Every element as a product of transversal representatives, unsorted.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for e in &elems {
                for &pt in &level.orbit {
                    next.push(e.compose(&level.transversal[pt].as_ref().unwrap().0));
                }
            }
            elems = next;
        }
        elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &c).unwrap()
    }

    #[test]
    fn symmetric_four() {
        let b = Bsgs::build(4, &[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])]);
        assert_eq!(b.order(), 24);
        assert_eq!(b.base()[0], 0);
        for g in b.strong_generators() {
            assert!(b.sift(&g).is_identity());
        }
    }

    #[test]
    fn trivial_chain() {
        let b = Bsgs::build(3, &[Permutation::identity(3)]);
        assert_eq!(b.order(), 1);
        assert!(b.base().is_empty());
        assert!(b.contains(&Permutation::identity(3)));
        assert!(!b.contains(&cyc(3, &[&[1, 2]])));
    }

    #[test]
    fn enumerate_matches_order() {
        let b = Bsgs::build(5, &[cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[3, 4, 5]])]);
        let mut e = b.enumerate();
        e.sort();
        e.dedup();
        assert_eq!(e.len() as u128, b.order());
        assert_eq!(b.order(), 60);
    }
}
