use std::fmt;

/// A set of positions in a label-ordered boundary or bag, stored as a bitmask.
///
/// Position 0 is the vertex with the smallest label. Bags and boundaries are
/// limited to [`IndexSet::CAPACITY`] positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        IndexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All positions `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, pos: usize) -> bool {
        pos < 64 && self.0 >> pos & 1 == 1
    }

    pub fn with(self, pos: usize) -> Self {
        IndexSet(self.0 | 1 << pos)
    }

    pub fn without(self, pos: usize) -> Self {
        IndexSet(self.0 & !(1 << pos))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    /// Opens a new slot at `pos`, shifting positions `>= pos` up by one.
    /// The new slot is set when `value` is true.
    pub fn insert_slot(self, pos: usize, value: bool) -> Self {
        let low = self.0 & ((1u64 << pos) - 1);
        let high = (self.0 >> pos) << (pos + 1);
        IndexSet(low | high | (value as u64) << pos)
    }

    /// Removes the slot at `pos`, shifting positions `> pos` down by one.
    pub fn remove_slot(self, pos: usize) -> Self {
        let low = self.0 & ((1u64 << pos) - 1);
        let high = if pos >= 63 { 0 } else { (self.0 >> (pos + 1)) << pos };
        IndexSet(low | high)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let pos = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(pos)
            }
        })
    }

    /// Canonical textual form: `{}` or `{0,2,5}`.
    pub fn render(self) -> String {
        let items: Vec<String> = self.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn parse(text: &str) -> Option<Self> {
        let inner = text.strip_prefix('{')?.strip_suffix('}')?;
        if inner.is_empty() {
            return Some(IndexSet::empty());
        }
        let mut set = IndexSet::empty();
        let mut last: Option<usize> = None;
        for item in inner.split(',') {
            let pos: usize = item.parse().ok()?;
            if pos >= Self::CAPACITY || last.is_some_and(|l| l >= pos) || item != pos.to_string() {
                return None;
            }
            last = Some(pos);
            set = set.with(pos);
        }
        Some(set)
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::empty(), IndexSet::with)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_shift() {
        let s: IndexSet = [0, 2, 3].into_iter().collect();
        assert_eq!(s.insert_slot(1, true), [0, 1, 3, 4].into_iter().collect());
        assert_eq!(s.insert_slot(0, false), [1, 3, 4].into_iter().collect());
        assert_eq!(s.remove_slot(2), [0, 2].into_iter().collect());
        assert_eq!(s.remove_slot(1), [0, 1, 2].into_iter().collect());
    }

    #[test]
    fn render_parse() {
        let s: IndexSet = [1, 4].into_iter().collect();
        assert_eq!(s.render(), "{1,4}");
        assert_eq!(IndexSet::parse("{1,4}"), Some(s));
        assert_eq!(IndexSet::parse("{}"), Some(IndexSet::empty()));
        assert_eq!(IndexSet::parse("{4,1}"), None);
        assert_eq!(IndexSet::parse("{01}"), None);
        assert_eq!(IndexSet::parse("1,4"), None);
    }
}
