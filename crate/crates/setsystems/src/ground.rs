//! Ground sets and subsets of them.
//!
//! A [`GroundSet`] is an ordered, labeled universe; a [`SubsetMask`] is a
//! fixed-length bit vector over one universe. Masks are not capped at a
//! machine word so that padded constructions with large domains still fit;
//! exhaustive procedures are capped separately.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// One element of a ground set: a stable 0-based index plus a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub index: usize,
    pub label: String,
}

/// A finite ordered universe with pairwise-distinct labels.
#[derive(Clone, Debug)]
pub struct GroundSet {
    elements: Vec<Element>,
    by_label: HashMap<String, usize>,
}

impl GroundSet {
    /// Builds a ground set from labels, rejecting duplicates.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements = Vec::new();
        let mut by_label = HashMap::new();
        for (index, label) in labels.into_iter().enumerate() {
            let label = label.into();
            if by_label.insert(label.clone(), index).is_some() {
                return Err(Error::construction(format!(
                    "duplicate ground-set label {label:?}"
                )));
            }
            elements.push(Element { index, label });
        }
        Ok(GroundSet { elements, by_label })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn label(&self, index: usize) -> &str {
        &self.elements[index].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn empty_mask(&self) -> SubsetMask {
        SubsetMask::empty(self.size())
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    /// Mask of the given labels; unknown labels are an error.
    pub fn mask_of_labels<'a, I>(&self, labels: I) -> Result<SubsetMask>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = self.empty_mask();
        for label in labels {
            let index = self.index_of(label).ok_or_else(|| {
                Error::construction(format!("unknown ground-set label {label:?}"))
            })?;
            mask.insert(index);
        }
        Ok(mask)
    }

    /// Labels of the elements in `mask`, in index order.
    pub fn labels_of_mask<'a>(&'a self, mask: &SubsetMask) -> Vec<&'a str> {
        mask.indices().map(|i| self.label(i)).collect()
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for GroundSet {}

/// A subset of a ground set, stored as a bit vector of the universe size.
///
/// Ordering is lexicographic on the sorted index sequence (so `{}` < `{0}` <
/// `{0,1}` < `{1}`); combined with a cardinality key this yields the
/// deterministic enumeration order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    universe: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        SubsetMask {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut mask = Self::empty(universe);
        for i in 0..universe {
            mask.insert(i);
        }
        mask
    }

    /// Mask from explicit indices. Panics on an out-of-range index.
    pub fn from_indices<I>(universe: usize, indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = Self::empty(universe);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    /// Mask from the low `universe` bits of `bits` (element i = bit i).
    /// Requires `universe <= 64`.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= 64, "from_bits supports universes up to 64");
        assert!(
            universe == 64 || bits < (1u64 << universe),
            "bit set beyond universe"
        );
        SubsetMask {
            universe,
            words: if universe == 0 { vec![] } else { vec![bits] },
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        assert!(index < self.universe, "index beyond universe");
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "index beyond universe");
        self.words[index / 64] |= 1 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.universe, "index beyond universe");
        self.words[index / 64] &= !(1 << (index % 64));
    }

    pub fn with(&self, index: usize) -> Self {
        let mut mask = self.clone();
        mask.insert(index);
        mask
    }

    pub fn without(&self, index: usize) -> Self {
        let mut mask = self.clone();
        mask.remove(index);
        mask
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        SubsetMask {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        SubsetMask {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        SubsetMask {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Set indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.indices();
        let mut b = other.indices();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.indices().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
