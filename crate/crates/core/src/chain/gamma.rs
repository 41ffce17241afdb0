//! Simplicial complexes with a `Γ`-action, stored by orbit representatives.
//!
//! Text format, one orbit cell per line:
//!
//! ```text
//! group Z^2
//! 0 v
//! 1 a (v, t1, 1) (v, e, -1)
//! 1 b (v, t2, 1) (v, e, -1)
//! 2 s (a, e, 1) (b, t1, 1) (a, t2, -1) (b, e, -1)
//! ```
//!
//! A face `(orb, w, s)` of cell `σ` says the face equals `w · orb` and enters
//! `∂σ` with sign `s`. A trailing `stab w1 w2 ...` lists stabiliser
//! generators. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::homology::ZComplex;
use super::snf::IntMatrix;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupRingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub orbit: usize,
    pub translator: GroupElement,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCell {
    pub id: String,
    pub faces: Vec<Face>,
    /// Generators of the stabiliser; empty means trivial.
    pub stabilizer: Vec<GroupElement>,
}

#[derive(Debug, Clone)]
pub struct GammaComplex {
    group: Group,
    cells: Vec<Vec<OrbitCell>>,
}

impl GammaComplex {
    pub fn new(group: Group, cells: Vec<Vec<OrbitCell>>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Validation("a complex needs at least one degree".into()));
        }
        for (k, level) in cells.iter().enumerate() {
            for c in level {
                if k == 0 && !c.faces.is_empty() {
                    return Err(Error::Validation(format!("vertex orbit {} has faces", c.id)));
                }
                for f in &c.faces {
                    if k == 0 || f.orbit >= cells[k - 1].len() {
                        return Err(Error::Validation(format!("cell {} refers to a missing face orbit", c.id)));
                    }
                    if f.sign != 1 && f.sign != -1 {
                        return Err(Error::Validation(format!("cell {} has a face sign other than ±1", c.id)));
                    }
                    group.check(&f.translator)?;
                }
                for g in &c.stabilizer {
                    group.check(g)?;
                }
            }
        }
        let gc = Self { group, cells };
        gc.check_square_zero()?;
        Ok(gc)
    }

    /// Exact in `ZΓ` for free actions; for non-free ones only the quotient is checked.
    fn check_square_zero(&self) -> Result<()> {
        let free = self.is_free();
        for k in 2..self.cells.len() {
            for c in &self.cells[k] {
                let mut acc: BTreeMap<usize, GroupRingElement> = BTreeMap::new();
                for f in &c.faces {
                    for ff in &self.cells[k - 1][f.orbit].faces {
                        let g = if free {
                            self.group.mul_unchecked(&f.translator, &ff.translator)
                        } else {
                            self.group.identity()
                        };
                        let e = acc.entry(ff.orbit).or_default();
                        *e = &*e + &GroupRingElement::term(BigInt::from(f.sign * ff.sign), g);
                    }
                }
                if acc.values().any(|x| !x.is_zero()) {
                    return Err(Error::Validation(format!("boundary of boundary of {} is not zero", c.id)));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.cells.get(k).map_or(0, |c| c.len())
    }

    pub fn cells(&self, k: usize) -> &[OrbitCell] {
        self.cells.get(k).map_or(&[], |c| c.as_slice())
    }

    pub fn is_free(&self) -> bool {
        self.cells.iter().flatten().all(|c| c.stabilizer.is_empty())
    }

    /// Cellular chains of `P/Γ`.
    pub fn quotient(&self) -> Result<ZComplex> {
        let dims: Vec<usize> = self.cells.iter().map(|c| c.len()).collect();
        let mut mats = Vec::new();
        for k in 1..dims.len() {
            let mut m = IntMatrix::zeros(dims[k - 1], dims[k]);
            for (j, c) in self.cells[k].iter().enumerate() {
                for f in &c.faces {
                    m[(f.orbit, j)] += BigInt::from(f.sign);
                }
            }
            mats.push(m);
        }
        ZComplex::new(dims, mats)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut group: Option<Group> = None;
        let mut cells: Vec<Vec<OrbitCell>> = Vec::new();
        let mut ids: Vec<BTreeMap<String, usize>> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(g) = line.strip_prefix("group ") {
                group = Some(Group::parse(g).map_err(|e| err(e.to_string()))?);
                continue;
            }
            let group = group.as_ref().ok_or_else(|| err("missing `group` header".into()))?;
            let (body, stab) = match line.split_once("stab") {
                Some((b, s)) => (b, Some(s)),
                None => (line, None),
            };
            let (head, rest) = match body.find('(') {
                Some(i) => (&body[..i], &body[i..]),
                None => (body, ""),
            };
            let mut head = head.split_whitespace();
            let degree: usize = head
                .next()
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| err("expected a degree".into()))?;
            let id = head.next().ok_or_else(|| err("expected a cell id".into()))?.to_string();
            if head.next().is_some() {
                return Err(err("unexpected token before faces".into()));
            }
            if degree > cells.len() {
                return Err(err(format!("degree {degree} appears before degree {}", cells.len())));
            }
            if degree == cells.len() {
                cells.push(Vec::new());
                ids.push(BTreeMap::new());
            }
            let mut faces = Vec::new();
            for chunk in rest.split(')').map(str::trim).filter(|c| !c.is_empty()) {
                let inner = chunk.strip_prefix('(').ok_or_else(|| err(format!("malformed face {chunk:?}")))?;
                let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(err(format!("face needs (orbit, word, sign), got {inner:?}")));
                }
                if degree == 0 {
                    return Err(err("vertices have no faces".into()));
                }
                let orbit = *ids[degree - 1]
                    .get(parts[0])
                    .ok_or_else(|| err(format!("unknown face orbit {:?}", parts[0])))?;
                let translator = group.parse_word(parts[1]).map_err(|e| err(e.to_string()))?;
                let sign: i8 = parts[2].parse().map_err(|_| err(format!("bad sign {:?}", parts[2])))?;
                faces.push(Face { orbit, translator, sign });
            }
            let stabilizer = match stab {
                Some(s) => s
                    .split_whitespace()
                    .map(|w| group.parse_word(w).map_err(|e| err(e.to_string())))
                    .collect::<Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            if ids[degree].insert(id.clone(), cells[degree].len()).is_some() {
                return Err(err(format!("duplicate cell id {id:?}")));
            }
            cells[degree].push(OrbitCell { id, faces, stabilizer });
        }
        let group = group.ok_or(Error::Parse { line: 0, msg: "empty cell list".into() })?;
        Self::new(group, cells)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("group {}\n", self.group.spec());
        for (k, level) in self.cells.iter().enumerate() {
            for c in level {
                let _ = write!(s, "{k} {}", c.id);
                for f in &c.faces {
                    let face_id = &self.cells[k - 1][f.orbit].id;
                    let _ = write!(s, " ({face_id}, {}, {})", self.group.format_word(&f.translator), f.sign);
                }
                if !c.stabilizer.is_empty() {
                    s.push_str(" stab");
                    for g in &c.stabilizer {
                        let _ = write!(s, " {}", self.group.format_word(g));
                    }
                }
                s.push('\n');
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::homology::HomologyGroup;

    const TORUS: &str = "group Z^2
0 v
1 a (v, t1, 1) (v, e, -1)
1 b (v, t2, 1) (v, e, -1)
2 s (a, e, 1) (b, t1, 1) (a, t2, -1) (b, e, -1)
";

    #[test]
    fn torus_round_trip_and_homology() {
        let gc = GammaComplex::parse(TORUS).unwrap();
        assert!(gc.is_free());
        let h = gc.quotient().unwrap().homology();
        assert_eq!(h, vec![HomologyGroup::free(1), HomologyGroup::free(2), HomologyGroup::free(1)]);
        let again = GammaComplex::parse(&gc.to_text()).unwrap();
        assert_eq!(again.to_text(), gc.to_text());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GammaComplex::parse("0 v\n").is_err());
        assert!(GammaComplex::parse("group Z\n0 v\n1 a (w, t, 1)\n").is_err());
        let bad = "group Z^2\n0 v\n1 a (v, t1, 1) (v, e, -1)\n1 b (v, t2, 1) (v, e, -1)\n2 s (b, t1, 1) (a, e, -1)\n";
        assert!(matches!(GammaComplex::parse(bad), Err(Error::Validation(_))));
    }
}
