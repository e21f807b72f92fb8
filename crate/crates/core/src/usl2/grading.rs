use std::collections::BTreeMap;

use super::USl2Element;

/// An element split into its homogeneous components `U_n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedDecomposition {
    pub components: BTreeMap<i64, USl2Element>,
}

impl GradedDecomposition {
    pub fn of(u: &USl2Element) -> Self {
        let mut components: BTreeMap<i64, USl2Element> = BTreeMap::new();
        for (m, c) in u.terms() {
            components
                .entry(m.degree())
                .or_default()
                .add_term(*m, c.clone());
        }
        components.retain(|_, v| !v.is_zero());
        GradedDecomposition { components }
    }

    pub fn component(&self, n: i64) -> USl2Element {
        self.components.get(&n).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.components.keys().copied()
    }

    pub fn sum(&self) -> USl2Element {
        self.components
            .values()
            .fold(USl2Element::zero(), |acc, v| &acc + v)
    }

    /// True when every term of component `n` has degree `n`.
    pub fn is_consistent(&self) -> bool {
        self.components
            .iter()
            .all(|(n, v)| v.terms().all(|(m, _)| m.degree() == *n))
    }
}

impl USl2Element {
    pub fn decompose(&self) -> GradedDecomposition {
        GradedDecomposition::of(self)
    }

    pub fn is_homogeneous(&self, n: i64) -> bool {
        self.terms().all(|(m, _)| m.degree() == n)
    }
}
