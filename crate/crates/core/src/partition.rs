use std::fmt;

/// An integer partition stored as its nonzero parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts `parts` only if they are already weakly decreasing; trailing
    /// zeros are dropped.
    pub fn from_decreasing(parts: &[usize]) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(parts.to_vec()))
    }

    /// The rectangle with `rows` parts equal to `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        Partition::new(vec![width; rows])
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        Partition(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand for [`Partition::conjugate`].
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}
