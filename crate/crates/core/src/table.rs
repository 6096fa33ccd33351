//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..N` and index `0` is the identity; labels
//! are cosmetic. Construction checks shape, closure, the unit laws and the
//! existence of inverses. Associativity is deliberately left to
//! [`verify_group_axioms`] so that a corrupted table can be constructed and
//! reported with a witness triple.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    BadShape { row: usize, len: usize, order: usize },
    #[error("entry ({row}, {col}) = {value} out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("identity element must be index 0, found index {found}")]
    IdentityNotAtZero { found: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("{len} labels for {order} elements")]
    BadLabels { len: usize, order: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    /// Row-major: `product[x * order + y]` is the index of `x * y`.
    product: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroupTable {
    /// Builds a table from explicit rows.
    ///
    /// Requires a square table with in-range entries whose index 0 is a
    /// two-sided identity and where every element has a two-sided inverse.
    /// Associativity is not required here; see [`verify_group_axioms`].
    pub fn from_rows(
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, TableError> {
        let order = rows.len();
        if order == 0 {
            return Err(TableError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(TableError::BadShape {
                    row,
                    len: r.len(),
                    order,
                });
            }
        }
        let product: Vec<usize> = rows.into_iter().flatten().collect();
        Self::from_flat(order, product, labels)
    }

    /// As [`FiniteGroupTable::from_rows`] with a row-major flat table.
    pub fn from_flat(
        order: usize,
        product: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, TableError> {
        if order == 0 {
            return Err(TableError::Empty);
        }
        if product.len() != order * order {
            return Err(TableError::BadShape {
                row: product.len() / order.max(1),
                len: product.len() % order.max(1),
                order,
            });
        }
        for (pos, &value) in product.iter().enumerate() {
            if value >= order {
                return Err(TableError::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value,
                    order,
                });
            }
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(TableError::BadLabels {
                    len: l.len(),
                    order,
                });
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| product[e * order + x] == x && product[x * order + e] == x))
            .ok_or(TableError::NoIdentity)?;
        if identity != 0 {
            return Err(TableError::IdentityNotAtZero { found: identity });
        }
        let mut inverse = Vec::with_capacity(order);
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| product[x * order + y] == 0 && product[y * order + x] == 0)
                .ok_or(TableError::NoInverse { element: x })?;
            inverse.push(inv);
        }
        Ok(FiniteGroupTable {
            order,
            product,
            identity: 0,
            inverse,
            labels,
        })
    }

    /// The cyclic group of order `n`, with index `k` playing `a^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        let mut product = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                product[i * n + j] = (i + j) % n;
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_owned(),
                1 => "a".to_owned(),
                _ => format!("a^{i}"),
            })
            .collect();
        FiniteGroupTable {
            order: n,
            product,
            identity: 0,
            inverse,
            labels: Some(labels),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.product[x * self.order + y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse_of(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of an element, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TableError> {
        if labels.len() != self.order {
            return Err(TableError::BadLabels {
                len: labels.len(),
                order: self.order,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The table rows, reconstructed for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.product[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Same binary operation, ignoring labels.
    pub fn same_operation(&self, other: &FiniteGroupTable) -> bool {
        self.order == other.order && self.product == other.product
    }
}

/// Witnesses for the first failure of each group axiom; all `None` means the
/// table is a group.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub closure_failure: Option<(usize, usize)>,
    pub identity_failure: Option<usize>,
    pub inverse_failure: Option<usize>,
    pub associativity_failure: Option<(usize, usize, usize)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.closure_failure.is_none()
            && self.identity_failure.is_none()
            && self.inverse_failure.is_none()
            && self.associativity_failure.is_none()
    }
}

/// Exhaustive group-axiom check: closure, unit laws for element 0, two-sided
/// inverses, and associativity over all `N^3` triples.
///
/// Works from the raw product data, ignoring the cached identity and inverse
/// tables.
pub fn verify_group_axioms(t: &FiniteGroupTable) -> AxiomReport {
    let n = t.order;
    let mut report = AxiomReport::default();
    'closure: for x in 0..n {
        for y in 0..n {
            if t.product[x * n + y] >= n {
                report.closure_failure = Some((x, y));
                break 'closure;
            }
        }
    }
    if report.closure_failure.is_some() {
        // no safe lookups past this point
        return report;
    }
    report.identity_failure = (0..n).find(|&x| t.mul(0, x) != x || t.mul(x, 0) != x);
    report.inverse_failure =
        (0..n).find(|&x| !(0..n).any(|y| t.mul(x, y) == 0 && t.mul(y, x) == 0));
    'assoc: for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            for z in 0..n {
                if t.mul(xy, z) != t.mul(x, t.mul(y, z)) {
                    report.associativity_failure = Some((x, y, z));
                    break 'assoc;
                }
            }
        }
    }
    report
}
