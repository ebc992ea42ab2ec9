use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::error::Result;

/// Idempotent cache. The lock is never held while computing, so concurrent
/// callers may compute the same entry twice; the values are identical.
#[derive(Debug)]
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn get_or_try_insert<F: FnOnce() -> Result<V>>(&self, key: &K, f: F) -> Result<Arc<V>> {
        if let Some(v) = self.map.read().expect("memo poisoned").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(f()?);
        self.map.write().expect("memo poisoned").insert(key.clone(), v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
