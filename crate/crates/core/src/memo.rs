use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;

/// Process-wide fill-once cache. The lock is never held while a value is
/// being computed, so computations may recurse into the same table.
pub(crate) struct Memo<K, V> {
    table: OnceLock<Mutex<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            table: OnceLock::new(),
        }
    }

    fn table(&self) -> &Mutex<HashMap<K, V>> {
        self.table.get_or_init(|| Mutex::new(HashMap::new()))
    }

    pub(crate) fn get_or_try<F>(&self, key: &K, compute: F) -> Result<V>
    where
        F: FnOnce() -> Result<V>,
    {
        if let Some(v) = self.table().lock().expect("memo poisoned").get(key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        let mut guard = self.table().lock().expect("memo poisoned");
        Ok(guard.entry(key.clone()).or_insert(v).clone())
    }
}
