use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Search-node and wall-clock limit, shared by every search that holds a
/// clone of it.
#[derive(Debug, Clone)]
pub struct Budget {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::new(None, None)
    }

    pub fn new(max_nodes: Option<u64>, timeout: Option<Duration>) -> Self {
        Budget {
            inner: Arc::new(Inner { max_nodes, deadline: timeout.map(|t| Instant::now() + t), used: AtomicU64::new(0) }),
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget::new(Some(max_nodes), None)
    }

    pub fn timeout(timeout: Duration) -> Self {
        Budget::new(None, Some(timeout))
    }

    pub fn is_unlimited(&self) -> bool {
        self.inner.max_nodes.is_none() && self.inner.deadline.is_none()
    }

    pub fn used(&self) -> u64 {
        self.inner.used.load(Ordering::Relaxed)
    }

    /// Records `n` search nodes; `false` once any limit is exceeded.
    pub fn charge(&self, n: u64) -> bool {
        let used = self.inner.used.fetch_add(n, Ordering::Relaxed) + n;
        !self.inner.max_nodes.is_some_and(|m| used > m) && !self.inner.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn exhausted(&self) -> bool {
        self.inner.max_nodes.is_some_and(|m| self.used() > m) || self.inner.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
