use std::collections::BTreeMap;
use std::fmt;

use super::partition::Partition;
use crate::exact::poly::join_terms;
use crate::exact::Rational;

/// A finite linear combination of Schur polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn new() -> SchurExpansion {
        SchurExpansion::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    pub fn add_term(&mut self, p: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert(Rational::ZERO);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// Terms of size `d`, in display order.
    pub fn homogeneous(&self, d: u32) -> Vec<(Partition, Rational)> {
        let mut v: Vec<(Partition, Rational)> = self
            .terms
            .iter()
            .filter(|(p, _)| p.size() == d)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn truncate(&self, bound: u32) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() <= bound)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only partitions with at most `n` parts.
    pub fn restrict_length(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> SchurExpansion {
        if c.is_zero() {
            return SchurExpansion::new();
        }
        SchurExpansion {
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Terms in display order: size ascending, reverse lexicographic within a size.
    pub fn display_terms(&self) -> Vec<(Partition, Rational)> {
        let mut v: Vec<(Partition, Rational)> = self.terms.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.display_cmp(&b.0));
        v
    }

    pub fn to_text(&self) -> String {
        let terms = self.display_terms();
        join_terms(terms.iter().map(|(p, c)| (c, format!("s{}", p.label()))), false)
    }

    pub fn to_latex(&self) -> String {
        let terms = self.display_terms();
        join_terms(terms.iter().map(|(p, c)| (c, format!("s_{{{}}}", p.label()))), true)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion({})", self.to_text())
    }
}
