use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use rustc_hash::FxBuildHasher;

#[cfg(feature = "parallel")]
type Map<K, V> = dashmap::DashMap<K, V, FxBuildHasher>;

#[cfg(not(feature = "parallel"))]
type Map<K, V> = std::sync::Mutex<std::collections::HashMap<K, V, FxBuildHasher>>;

/// Transposition table from position keys to values.
///
/// Safe for concurrent use; a value is a pure function of its key, so racing
/// writers store the same thing.
pub struct MemoTable<K, V> {
    map: Map<K, V>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl<K, V> Default for MemoTable<K, V>
where
    K: Eq + Hash,
{
    fn default() -> Self {
        MemoTable {
            map: Map::default(),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }
}

impl<K, V> MemoTable<K, V>
where
    K: Eq + Hash,
    V: Copy + PartialEq + std::fmt::Debug,
{
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &K) -> Option<V> {
        #[cfg(feature = "parallel")]
        let found = self.map.get(key).map(|v| *v);
        #[cfg(not(feature = "parallel"))]
        let found = self.map.lock().unwrap().get(key).copied();
        match found {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        found
    }

    pub fn insert(&self, key: K, value: V) {
        #[cfg(feature = "parallel")]
        let previous = self.map.insert(key, value);
        #[cfg(not(feature = "parallel"))]
        let previous = self.map.lock().unwrap().insert(key, value);
        if let Some(old) = previous {
            assert_eq!(old, value, "memo entry rewritten with a different value");
        }
    }

    pub fn len(&self) -> usize {
        #[cfg(feature = "parallel")]
        return self.map.len();
        #[cfg(not(feature = "parallel"))]
        return self.map.lock().unwrap().len();
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Copy of every stored entry, in no particular order.
    pub fn entries(&self) -> Vec<(K, V)>
    where
        K: Clone,
    {
        #[cfg(feature = "parallel")]
        return self.map.iter().map(|e| (e.key().clone(), *e.value())).collect();
        #[cfg(not(feature = "parallel"))]
        return self
            .map
            .lock()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect();
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_hits_and_misses() {
        let m: MemoTable<u32, i32> = MemoTable::new();
        assert_eq!(m.get(&1), None);
        m.insert(1, 5);
        m.insert(1, 5);
        assert_eq!(m.get(&1), Some(5));
        assert_eq!((m.hits(), m.misses(), m.len()), (1, 1, 1));
    }

    #[test]
    #[should_panic(expected = "rewritten")]
    fn conflicting_write_panics() {
        let m: MemoTable<u32, i32> = MemoTable::new();
        m.insert(1, 5);
        m.insert(1, 6);
    }
}
