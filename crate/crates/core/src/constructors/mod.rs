//! Deterministic group builders and the group file format.

mod families;
mod file;
mod matrix;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub use families::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, example_group,
    example_matrix, psl2, semidirect_affine, symmetric, EXAMPLE_ACTING_ORDER, EXAMPLE_PRIME,
};
pub use file::{parse_group_file, serialize_group};
pub use matrix::{find_element_of_order, find_irreducible_element, Matrix2p};

use crate::error::{GroupError, Result};
use crate::permcore::{Caps, PermGroup};

/// A built-in family with parameters.
///
/// Text form (also used as the corpus label): `cyclic:N`, `dihedral:N`,
/// `symmetric:N`, `alternating:N`, `elementary-abelian:P:K`, `psl2:Q`,
/// `affine:P:M` (irreducible acting element of order `M`), `affine-any:P:M`
/// (first companion matrix of order `M`), `example`, and `A*B` for direct
/// products. Short aliases `cN`, `dN`, `sN`, `aN` are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    Psl2(usize),
    Affine { p: u64, m: u64, irreducible: bool },
    Example,
    Product(Box<Builtin>, Box<Builtin>),
}

impl Builtin {
    pub fn build(&self, caps: Caps) -> Result<PermGroup> {
        match self {
            Builtin::Cyclic(n) => cyclic(*n, caps),
            Builtin::Dihedral(n) => dihedral(*n, caps),
            Builtin::Symmetric(n) => symmetric(*n, caps),
            Builtin::Alternating(n) => alternating(*n, caps),
            Builtin::ElementaryAbelian(p, k) => elementary_abelian(*p, *k, caps),
            Builtin::Psl2(q) => psl2(*q),
            Builtin::Affine { p, m, irreducible } => {
                let mat = self::Builtin::acting_matrix(*p, *m, *irreducible)?;
                semidirect_affine(&mat, caps)
            }
            Builtin::Example => {
                caps.check_degree((EXAMPLE_PRIME * EXAMPLE_PRIME) as usize)?;
                Ok(example_group())
            }
            Builtin::Product(a, b) => direct_product(&a.build(caps)?, &b.build(caps)?, caps),
        }
    }

    fn acting_matrix(p: u64, m: u64, irreducible: bool) -> Result<Matrix2p> {
        if irreducible {
            find_irreducible_element(p, m)
        } else {
            find_element_of_order(p, m)
        }
    }

    /// Acting matrix for affine families, for display in reports.
    pub fn matrix(&self) -> Option<Matrix2p> {
        match self {
            Builtin::Affine { p, m, irreducible } => {
                Builtin::acting_matrix(*p, *m, *irreducible).ok()
            }
            Builtin::Example => Some(example_matrix()),
            _ => None,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Cyclic(n) => write!(f, "cyclic:{n}"),
            Builtin::Dihedral(n) => write!(f, "dihedral:{n}"),
            Builtin::Symmetric(n) => write!(f, "symmetric:{n}"),
            Builtin::Alternating(n) => write!(f, "alternating:{n}"),
            Builtin::ElementaryAbelian(p, k) => write!(f, "elementary-abelian:{p}:{k}"),
            Builtin::Psl2(q) => write!(f, "psl2:{q}"),
            Builtin::Affine {
                p,
                m,
                irreducible: true,
            } => write!(f, "affine:{p}:{m}"),
            Builtin::Affine {
                p,
                m,
                irreducible: false,
            } => write!(f, "affine-any:{p}:{m}"),
            Builtin::Example => f.write_str("example"),
            Builtin::Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('*') {
            return Ok(Builtin::Product(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let bad = || GroupError::InvalidParameter(format!("unknown builtin '{s}'"));
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default().to_ascii_lowercase();
        let params: Vec<u64> = parts
            .map(|x| x.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let one = |ctor: fn(usize) -> Builtin| match params[..] {
            [n] => Ok(ctor(n as usize)),
            _ => Err(bad()),
        };
        // short aliases such as `s4`, `c30`
        if params.is_empty() && name.len() > 1 {
            let (head, tail) = name.split_at(1);
            if let Ok(n) = tail.parse::<usize>() {
                return match head {
                    "c" => Ok(Builtin::Cyclic(n)),
                    "d" => Ok(Builtin::Dihedral(n)),
                    "s" => Ok(Builtin::Symmetric(n)),
                    "a" => Ok(Builtin::Alternating(n)),
                    _ => Err(bad()),
                };
            }
        }
        match name.as_str() {
            "cyclic" => one(Builtin::Cyclic),
            "dihedral" => one(Builtin::Dihedral),
            "symmetric" => one(Builtin::Symmetric),
            "alternating" => one(Builtin::Alternating),
            "psl2" => one(Builtin::Psl2),
            "elementary-abelian" | "ea" => match params[..] {
                [p, k] => Ok(Builtin::ElementaryAbelian(p as usize, k as usize)),
                _ => Err(bad()),
            },
            "affine" | "affine-any" => match params[..] {
                [p, m] => Ok(Builtin::Affine {
                    p,
                    m,
                    irreducible: name == "affine",
                }),
                _ => Err(bad()),
            },
            "example" if params.is_empty() => Ok(Builtin::Example),
            _ => Err(bad()),
        }
    }
}

/// Where a corpus group comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Builtin(Builtin),
    File(PathBuf),
}

/// A labelled group description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub construction: Construction,
}

impl GroupSpec {
    pub fn builtin(b: Builtin) -> Self {
        GroupSpec {
            name: b.to_string(),
            construction: Construction::Builtin(b),
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        GroupSpec {
            name: path.display().to_string(),
            construction: Construction::File(path),
        }
    }

    pub fn matrix(&self) -> Option<Matrix2p> {
        match &self.construction {
            Construction::Builtin(b) => b.matrix(),
            Construction::File(_) => None,
        }
    }

    pub fn build(&self, caps: Caps) -> Result<PermGroup> {
        match &self.construction {
            Construction::Builtin(b) => b.build(caps),
            Construction::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    GroupError::parse(0, format!("cannot read {}: {e}", path.display()))
                })?;
                parse_group_file(&text, caps)
            }
        }
    }
}

/// The corpus scanned by default. The 12615-element showcase group is
/// appended only when `include_large` is set.
pub fn default_corpus(include_large: bool) -> Vec<GroupSpec> {
    use Builtin::*;
    let mut v: Vec<Builtin> = Vec::new();
    v.extend([6, 12, 15, 30, 60, 105].map(Cyclic));
    v.extend([3, 4, 5, 6, 10, 15].map(Dihedral));
    v.extend([3, 4].map(Symmetric));
    v.extend([4, 5].map(Alternating));
    v.extend([(2, 2), (3, 2), (5, 2)].map(|(p, k)| ElementaryAbelian(p, k)));
    v.extend([5, 7, 11].map(Psl2));
    v.push(Affine {
        p: 5,
        m: 4,
        irreducible: false,
    });
    v.push(Affine {
        p: 5,
        m: 3,
        irreducible: true,
    });
    v.push(Affine {
        p: 7,
        m: 3,
        irreducible: false,
    });
    v.push(Product(Box::new(Symmetric(3)), Box::new(Cyclic(5))));
    v.push(Product(Box::new(Dihedral(5)), Box::new(Cyclic(3))));
    v.push(Product(Box::new(Alternating(4)), Box::new(Cyclic(5))));
    if include_large {
        v.push(Example);
    }
    v.into_iter().map(GroupSpec::builtin).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_round_trip() {
        for spec in default_corpus(true) {
            let Construction::Builtin(b) = &spec.construction else {
                unreachable!()
            };
            assert_eq!(&spec.name.parse::<Builtin>().unwrap(), b);
        }
        assert_eq!("s4".parse::<Builtin>().unwrap(), Builtin::Symmetric(4));
        assert_eq!("a4".parse::<Builtin>().unwrap(), Builtin::Alternating(4));
        assert_eq!("c30".parse::<Builtin>().unwrap(), Builtin::Cyclic(30));
        assert!("nonsense:3".parse::<Builtin>().is_err());
        assert!("cyclic:x".parse::<Builtin>().is_err());
        assert!("cyclic".parse::<Builtin>().is_err());
    }

    #[test]
    fn corpus_builds_and_round_trips_through_files() {
        let caps = Caps::default();
        for spec in default_corpus(false) {
            let g = spec.build(caps).unwrap();
            let back = parse_group_file(&serialize_group(&g), caps).unwrap();
            assert_eq!(back.generators(), g.generators(), "{}", spec.name);
        }
    }

    #[test]
    fn affine_orders_match_matrix_orders() {
        let caps = Caps::default();
        for b in [
            "affine-any:5:4",
            "affine:5:3",
            "affine-any:7:3",
            "affine-any:3:1",
            "example",
        ] {
            let b: Builtin = b.parse().unwrap();
            let m = b.matrix().unwrap();
            let g = b.build(caps).unwrap();
            assert_eq!(g.order(), (m.p * m.p * m.order()) as u128, "{b}");
        }
    }
}
