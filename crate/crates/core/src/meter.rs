use std::cell::Cell;
use std::rc::Rc;

/// Shared counter of elementary enumeration steps.
///
/// Enumerators tick it for every candidate they examine and every vertex a
/// feasibility search visits, so the difference between two readings is the
/// work done in between. Clones share the same count.
#[derive(Clone, Debug, Default)]
pub struct WorkMeter(Rc<Cell<u64>>);

impl WorkMeter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&self, k: u64) {
        self.0.set(self.0.get() + k);
    }

    pub fn get(&self) -> u64 {
        self.0.get()
    }
}
