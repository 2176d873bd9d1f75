//! Memoized local data keyed by model and prime.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::tate::{tate, LocalData};
use crate::curve::model::WeierstrassModel;

const MAX_ENTRIES: usize = 200_000;

type Cache = RwLock<HashMap<(WeierstrassModel, u64), LocalData>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// [`tate`] with memoization. Concurrent callers may compute the same entry
/// twice; both insert identical values.
pub fn local_data(m: &WeierstrassModel, l: u64) -> LocalData {
    let key = (m.clone(), l);
    if let Some(d) = cache().read().unwrap().get(&key) {
        return d.clone();
    }
    let d = tate(m, l);
    let mut w = cache().write().unwrap();
    if w.len() >= MAX_ENTRIES {
        w.clear();
    }
    w.insert(key, d.clone());
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_value_matches_direct() {
        let m = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let m = m.clone();
                std::thread::spawn(move || local_data(&m, 11))
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), tate(&m, 11));
        }
    }
}
