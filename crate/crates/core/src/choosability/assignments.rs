use super::search::{apply_counts, first_counts, next_counts, Class};
use super::{check_len, ChoosabilityError, ListAssignment, SizeFunction, MAX_COLORS};
use crate::graph::Graph;

/// Lazily yields one `f`-assignment per color-renaming class.
///
/// Lists are filled in vertex order; colors not yet distinguished by the
/// lists so far are interchangeable, so each list only records how many
/// colors it takes from every such class, and brand-new colors enter as the
/// smallest unused integers.
pub fn canonical_assignments(g: &Graph, f: &SizeFunction) -> Result<CanonicalAssignments, ChoosabilityError> {
    check_len(g, f)?;
    let total = f.total();
    if total > MAX_COLORS {
        return Err(ChoosabilityError::ColorUniverse { total, max: MAX_COLORS });
    }
    Ok(CanonicalAssignments { sizes: f.0.clone(), stack: Vec::new(), lists: vec![0; f.len()], started: false, done: false })
}

pub struct CanonicalAssignments {
    sizes: Vec<u32>,
    stack: Vec<Frame>,
    lists: Vec<u64>,
    started: bool,
    done: bool,
}

struct Frame {
    classes: Vec<Class>,
    next: u32,
    k: [u8; 64],
}

impl CanonicalAssignments {
    fn universe(&self) -> u32 {
        self.sizes.iter().sum()
    }

    /// Pushes first-choice frames until every vertex has a list.
    fn descend(&mut self) {
        let universe = self.universe();
        loop {
            let depth = self.stack.len() - 1;
            let top = self.stack.last().unwrap();
            let mut child = Vec::new();
            let (list, next) = apply_counts(&top.classes, &top.k, self.sizes[depth], top.next, &mut child);
            self.lists[depth] = list;
            if depth + 1 == self.sizes.len() {
                return;
            }
            let mut k = [0u8; 64];
            let ok = first_counts(&child, self.sizes[depth + 1], universe - next, &mut k);
            debug_assert!(ok, "the full universe always admits a list");
            self.stack.push(Frame { classes: child, next, k });
        }
    }
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.sizes.is_empty() {
                self.done = true;
                return Some(ListAssignment(Vec::new()));
            }
            let mut k = [0u8; 64];
            first_counts(&[], self.sizes[0], self.universe(), &mut k);
            self.stack.push(Frame { classes: Vec::new(), next: 0, k });
        } else {
            let universe = self.universe();
            loop {
                let depth = self.stack.len() - 1;
                let f = self.sizes[depth];
                let top = self.stack.last_mut().unwrap();
                if next_counts(&top.classes, f, universe - top.next, &mut top.k) {
                    break;
                }
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
        self.descend();
        Some(ListAssignment(self.lists.clone()))
    }
}
