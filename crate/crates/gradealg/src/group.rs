//! Finite abelian groups as products of cyclic factors.
//!
//! A group is a list of factor orders; elements are component vectors reduced
//! modulo those orders. Enumeration is lexicographic on components, which
//! fixes row/column orders everywhere a matrix over the group appears.

use std::fmt;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factor_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    components: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(factor_orders: Vec<u64>) -> Result<Self, Error> {
        if factor_orders.is_empty() || factor_orders.iter().any(|&n| n == 0) {
            return Err(Error::BadParams(
                "factor orders must be a nonempty list of positive integers".into(),
            ));
        }
        Ok(Self { factor_orders })
    }

    /// The cyclic group of order 2.
    pub fn z2() -> Self {
        Self {
            factor_orders: vec![2],
        }
    }

    /// The trivial group (one cyclic factor of order 1).
    pub fn trivial() -> Self {
        Self {
            factor_orders: vec![1],
        }
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.factor_orders
    }

    pub fn order(&self) -> usize {
        self.factor_orders.iter().product::<u64>() as usize
    }

    pub fn is_z2(&self) -> bool {
        self.order() == 2
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            components: vec![0; self.factor_orders.len()],
        }
    }

    pub fn element(&self, components: Vec<u64>) -> Result<GroupElement, Error> {
        if components.len() != self.factor_orders.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factor_orders.len(),
                got: components.len(),
            });
        }
        Ok(GroupElement {
            components: components
                .into_iter()
                .zip(&self.factor_orders)
                .map(|(c, &n)| c % n)
                .collect(),
        })
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.components.len() == self.factor_orders.len()
            && g.components
                .iter()
                .zip(&self.factor_orders)
                .all(|(&c, &n)| c < n)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            components: a
                .components
                .iter()
                .zip(&b.components)
                .zip(&self.factor_orders)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            components: a
                .components
                .iter()
                .zip(&self.factor_orders)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        }
    }

    /// All elements in lexicographic component order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }

    /// Index of `g` in the lexicographic enumeration (first component most
    /// significant).
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut idx = 0u64;
        for (&c, &n) in g.components.iter().zip(&self.factor_orders) {
            idx = idx * n + c;
        }
        idx as usize
    }

    pub fn from_index(&self, mut index: usize) -> GroupElement {
        let mut components = vec![0u64; self.factor_orders.len()];
        for (slot, &n) in components
            .iter_mut()
            .rev()
            .zip(self.factor_orders.iter().rev())
        {
            *slot = (index as u64) % n;
            index /= n as usize;
        }
        GroupElement { components }
    }

    /// Parses a group spec like `Z2` or `Z2xZ3` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let bad = || Error::BadParams(format!("invalid group spec `{text}`"));
        let mut orders = Vec::new();
        for part in text.split(['x', 'X']) {
            let part = part.trim();
            let rest = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(bad)?;
            let n: u64 = rest.parse().map_err(|_| bad())?;
            orders.push(n);
        }
        Self::new(orders)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factor_orders.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl GroupElement {
    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0)
    }

    /// Parses comma-separated components, e.g. `1` or `0,2`.
    pub fn parse(group: &FiniteAbelianGroup, text: &str) -> Result<Self, Error> {
        let components: Result<Vec<u64>, _> = text
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::BadParams(format!("invalid group element `{text}`")))
            })
            .collect();
        let parsed = components?;
        if !parsed
            .iter()
            .zip(group.factor_orders())
            .all(|(&c, &n)| c < n)
            || parsed.len() != group.factor_orders().len()
        {
            return Err(Error::BadParams(format!(
                "group element `{text}` is out of range for {group}"
            )));
        }
        group.element(parsed)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        let elems = g.elements();
        assert_eq!(elems.len(), 6);
        assert_eq!(elems[0].components(), &[0, 0]);
        assert_eq!(elems[1].components(), &[0, 1]);
        assert_eq!(elems[3].components(), &[1, 0]);
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(g.index_of(e), i);
        }
    }

    #[test]
    fn addition_wraps() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        let a = g.element(vec![1, 2]).unwrap();
        let b = g.element(vec![1, 2]).unwrap();
        assert_eq!(g.add(&a, &b).components(), &[0, 1]);
        assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
    }

    #[test]
    fn parse_and_display() {
        let g = FiniteAbelianGroup::parse("Z2xZ3").unwrap();
        assert_eq!(g.factor_orders(), &[2, 3]);
        assert_eq!(g.to_string(), "Z2xZ3");
        assert_eq!(FiniteAbelianGroup::parse("z2").unwrap(), FiniteAbelianGroup::z2());
        assert!(FiniteAbelianGroup::parse("Q8").is_err());
        assert!(FiniteAbelianGroup::parse("Z0").is_err());
    }

    #[test]
    fn element_parse_checks_range() {
        let g = FiniteAbelianGroup::z2();
        assert!(GroupElement::parse(&g, "1").is_ok());
        assert!(GroupElement::parse(&g, "2").is_err());
        assert!(GroupElement::parse(&g, "0,1").is_err());
    }
}
