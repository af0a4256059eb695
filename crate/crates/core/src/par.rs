//! Execution policy for the data-parallel loops of the crate.

/// How a data-parallel loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "rayon")]
    Rayon,
}

impl Default for Parallelism {
    fn default() -> Self {
        #[cfg(feature = "rayon")]
        {
            Parallelism::Rayon
        }
        #[cfg(not(feature = "rayon"))]
        {
            Parallelism::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, U, F>(par: Parallelism, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match par {
        Parallelism::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "rayon")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<U, F>(par: Parallelism, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match par {
        Parallelism::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "rayon")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
    }
}

/// Maps `f` over `items` and concatenates the results in order.
pub fn flat_map<T, U, F>(par: Parallelism, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    match par {
        Parallelism::Sequential => items.iter().flat_map(f).collect(),
        #[cfg(feature = "rayon")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            items.par_iter().flat_map_iter(f).collect()
        }
    }
}

/// Maps `f` over `0..n` and concatenates the results in order.
pub fn flat_map_range<U, F>(par: Parallelism, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> Vec<U> + Sync + Send,
{
    match par {
        Parallelism::Sequential => (0..n).flat_map(f).collect(),
        #[cfg(feature = "rayon")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            (0..n).into_par_iter().flat_map_iter(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies_agree() {
        let items: Vec<u32> = (0..100).collect();
        let seq = map(Parallelism::Sequential, &items, |x| x * 3);
        let def = map(Parallelism::default(), &items, |x| x * 3);
        assert_eq!(seq, def);
        let seq = flat_map(Parallelism::Sequential, &items, |&x| vec![x; (x % 3) as usize]);
        let def = flat_map(Parallelism::default(), &items, |&x| vec![x; (x % 3) as usize]);
        assert_eq!(seq, def);
        assert_eq!(
            map_range(Parallelism::Sequential, 10, |i| i * i),
            map_range(Parallelism::default(), 10, |i| i * i)
        );
    }
}
