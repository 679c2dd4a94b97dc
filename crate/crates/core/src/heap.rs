use crate::cnf::Var;

/// Binary max-heap of variables keyed by an external activity table.
/// Ties go to the lower variable index.
#[derive(Clone, Debug, Default)]
pub(crate) struct VarHeap {
    heap: Vec<Var>,
    position: Vec<Option<u32>>,
}

#[inline]
fn before(activity: &[f64], a: Var, b: Var) -> bool {
    let (x, y) = (activity[a.index()], activity[b.index()]);
    x > y || (x == y && a < b)
}

impl VarHeap {
    pub(crate) fn new(num_vars: usize) -> VarHeap {
        VarHeap {
            heap: Vec::new(),
            position: vec![None; num_vars + 1],
        }
    }

    pub(crate) fn contains(&self, var: Var) -> bool {
        self.position[var.index()].is_some()
    }

    pub(crate) fn insert(&mut self, var: Var, activity: &[f64]) {
        if self.contains(var) {
            return;
        }
        self.position[var.index()] = Some(self.heap.len() as u32);
        self.heap.push(var);
        self.sift_up(self.heap.len() - 1, activity);
    }

    pub(crate) fn pop(&mut self, activity: &[f64]) -> Option<Var> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        self.position[top.index()] = None;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.position[last.index()] = Some(0);
            self.sift_down(0, activity);
        }
        Some(top)
    }

    /// Restores the heap property after `var`'s activity grew.
    pub(crate) fn increased(&mut self, var: Var, activity: &[f64]) {
        if let Some(pos) = self.position[var.index()] {
            self.sift_up(pos as usize, activity);
        }
    }

    fn sift_up(&mut self, mut i: usize, activity: &[f64]) {
        let var = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !before(activity, var, self.heap[parent]) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.position[self.heap[i].index()] = Some(i as u32);
            i = parent;
        }
        self.heap[i] = var;
        self.position[var.index()] = Some(i as u32);
    }

    fn sift_down(&mut self, mut i: usize, activity: &[f64]) {
        let var = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= self.heap.len() {
                break;
            }
            let right = left + 1;
            let child = if right < self.heap.len() && before(activity, self.heap[right], self.heap[left]) {
                right
            } else {
                left
            };
            if !before(activity, self.heap[child], var) {
                break;
            }
            self.heap[i] = self.heap[child];
            self.position[self.heap[i].index()] = Some(i as u32);
            i = child;
        }
        self.heap[i] = var;
        self.position[var.index()] = Some(i as u32);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_by_activity_then_index() {
        let activity = vec![0.0, 1.0, 3.0, 3.0, 0.5, 2.0];
        let mut heap = VarHeap::new(5);
        for i in [4, 1, 5, 3, 2] {
            heap.insert(Var::new(i), &activity);
        }
        let order: Vec<usize> = std::iter::from_fn(|| heap.pop(&activity)).map(Var::index).collect();
        assert_eq!(order, vec![2, 3, 5, 1, 4]);
    }

    #[test]
    fn increase_moves_up() {
        let mut activity = vec![0.0; 4];
        let mut heap = VarHeap::new(3);
        for i in 1..=3 {
            heap.insert(Var::new(i), &activity);
        }
        activity[3] = 10.0;
        heap.increased(Var::new(3), &activity);
        assert_eq!(heap.pop(&activity), Some(Var::new(3)));
        assert_eq!(heap.pop(&activity), Some(Var::new(1)));
    }
}
