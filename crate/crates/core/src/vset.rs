use std::fmt;

/// A set of trigraph vertices (0-based ids below 32), stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VSet(pub u32);

pub const MAX_VERTICES: usize = 32;

impl VSet {
    pub const EMPTY: VSet = VSet(0);

    pub fn full(k: usize) -> VSet {
        debug_assert!(k <= MAX_VERTICES);
        if k == MAX_VERTICES {
            VSet(u32::MAX)
        } else {
            VSet((1u32 << k) - 1)
        }
    }

    pub fn single(x: usize) -> VSet {
        VSet(1 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_VERTICES && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    pub fn with(self, x: usize) -> VSet {
        VSet(self.0 | 1 << x)
    }

    pub fn without(self, x: usize) -> VSet {
        VSet(self.0 & !(1 << x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: VSet) -> VSet {
        VSet(self.0 | o.0)
    }

    pub fn inter(self, o: VSet) -> VSet {
        VSet(self.0 & o.0)
    }

    pub fn minus(self, o: VSet) -> VSet {
        VSet(self.0 & !o.0)
    }

    pub fn intersects(self, o: VSet) -> bool {
        self.0 & o.0 != 0
    }

    pub fn is_subset(self, o: VSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Lowest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }
}

impl FromIterator<usize> for VSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VSet::EMPTY;
        for x in it {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, matching the file formats
        f.debug_set().entries(self.iter().map(|x| x + 1)).finish()
    }
}

/// Serialized as a sorted list of 1-based ids.
impl serde::Serialize for VSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|x| x + 1))
    }
}
