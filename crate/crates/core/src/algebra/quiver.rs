use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by position; the
/// user-facing identifiers are kept for printing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<V: Into<String>>(
        vertices: impl IntoIterator<Item = V>,
        arrows: impl IntoIterator<Item = (String, String, String)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut out = Vec::new();
        let mut names = HashMap::new();
        for (name, s, t) in arrows {
            let source = *index.get(&s).ok_or_else(|| Error::UnknownVertex(s.clone()))?;
            let target = *index.get(&t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            if names.insert(name.clone(), out.len()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            out.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    /// Quiver from positional data; vertex ids are `1..=n`.
    pub fn from_edges(n: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Quiver::new(
            (1..=n).map(|i| i.to_string()),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), (s + 1).to_string(), (t + 1).to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// All paths of length exactly `len`.
    pub fn paths_of_length(&self, len: usize) -> Vec<PathWord> {
        let mut layer: Vec<PathWord> = (0..self.vertex_count()).map(PathWord::stationary).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                for a in self.outgoing(p.target) {
                    next.push(p.then_arrow(self, a));
                }
            }
            layer = next;
        }
        layer
    }
}

/// A path in a quiver under left-to-right composition: `arrows[0]` first.
/// The empty word at a vertex is the stationary path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn stationary(v: usize) -> Self {
        PathWord {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        PathWord {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver("empty arrow word".into()));
        };
        let mut p = PathWord::arrow(q, first);
        for &a in &arrows[1..] {
            if q.arrow(a).source != p.target {
                return Err(Error::InvalidQuiver(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrow(*p.arrows.last().unwrap()).name,
                    q.arrow(a).name
                )));
            }
            p = p.then_arrow(q, a);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> PathWord {
        debug_assert_eq!(q.arrow(a).source, self.target);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        PathWord {
            source: self.source,
            target: q.arrow(a).target,
            arrows,
        }
    }

    /// `self` followed by `other`, if they compose.
    pub fn concat(&self, other: &PathWord) -> Option<PathWord> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> PathWord {
        PathWord {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertex_name(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, PathWord)>,
}

impl Relation {
    pub fn monomial(field: FieldSpec, path: PathWord) -> Self {
        Relation {
            terms: vec![(field.one(), path)],
        }
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn validate(&self, q: &Quiver) -> Result<()> {
        let Some((_, first)) = self.terms.first() else {
            return Err(Error::NonAdmissible("empty relation".into()));
        };
        for (_, p) in &self.terms {
            if p.source != first.source || p.target != first.target {
                return Err(Error::NonParallel(format!(
                    "`{}` and `{}`",
                    first.display(q),
                    p.display(q)
                )));
            }
            if p.len() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "term `{}` has length {} < 2",
                    p.display(q),
                    p.len()
                )));
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }
}

/// Quiver, relations and coefficient field: the input of [`build_algebra`].
///
/// [`build_algebra`]: super::build_algebra
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: FieldSpec,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: FieldSpec) -> Result<Self> {
        for r in &relations {
            r.validate(&quiver)?;
        }
        Ok(Presentation {
            quiver,
            relations,
            field,
        })
    }

    /// Relations given as arrow-name words, each a zero relation.
    pub fn monomial(quiver: Quiver, zero_paths: &[&[&str]], field: FieldSpec) -> Result<Self> {
        let mut rels = Vec::new();
        for word in zero_paths {
            let idx: Vec<usize> = word
                .iter()
                .map(|n| quiver.arrow_index(n).ok_or_else(|| Error::UnknownArrow(n.to_string())))
                .collect::<Result<_>>()?;
            rels.push(Relation::monomial(field, PathWord::from_arrows(&quiver, &idx)?));
        }
        Presentation::new(quiver, rels, field)
    }

    pub fn with_field(&self, field: FieldSpec) -> Result<Presentation> {
        if field == self.field {
            return Ok(self.clone());
        }
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, p)| Ok((convert_scalar(self.field, field, c)?, p.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Relation { terms })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            quiver: self.quiver.clone(),
            relations,
            field,
        })
    }

    pub fn opposite(&self) -> Presentation {
        Presentation {
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(Relation::reversed).collect(),
            field: self.field,
        }
    }
}

/// Carries a coefficient across fields through its printed integer or
/// fraction representative.
fn convert_scalar(from: FieldSpec, to: FieldSpec, c: &Scalar) -> Result<Scalar> {
    to.parse_scalar(&from.format(c))
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::dsl::print_presentation(self))
    }
}
