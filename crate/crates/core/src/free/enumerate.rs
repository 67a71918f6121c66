use super::{letter_at, FreeWord};

/// Every freely reduced word over `k` letters of length at most `max_len`,
/// exactly once, in shortlex order.
pub fn enumerate_reduced(k: usize, max_len: usize) -> ReducedWords {
    ReducedWords {
        k,
        max_len,
        layer: vec![FreeWord::identity(k)],
        pos: 0,
        len: 0,
    }
}

/// Streaming enumeration; each length layer is built from the previous one.
#[derive(Debug, Clone)]
pub struct ReducedWords {
    k: usize,
    max_len: usize,
    layer: Vec<FreeWord>,
    pos: usize,
    len: usize,
}

impl Iterator for ReducedWords {
    type Item = FreeWord;

    fn next(&mut self) -> Option<FreeWord> {
        if self.pos == self.layer.len() {
            if self.len == self.max_len || self.layer.is_empty() {
                return None;
            }
            let mut next = Vec::with_capacity(self.layer.len() * (2 * self.k - 1).max(1));
            for w in &self.layer {
                for r in 0..2 * self.k {
                    let l = letter_at(r);
                    if w.letters.last() != Some(&-l) {
                        let mut letters = w.letters.clone();
                        letters.push(l);
                        next.push(FreeWord {
                            rank: self.k,
                            letters,
                        });
                    }
                }
            }
            self.layer = next;
            self.pos = 0;
            self.len += 1;
            if self.layer.is_empty() {
                return None;
            }
        }
        self.pos += 1;
        Some(self.layer[self.pos - 1].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_reduced(2, 0).count(), 1);
        assert_eq!(enumerate_reduced(2, 1).count(), 5);
        assert_eq!(enumerate_reduced(2, 3).count(), 53);
        for l in 1..=7u32 {
            let exact = enumerate_reduced(2, l as usize)
                .filter(|w| w.len() == l as usize)
                .count();
            assert_eq!(exact, 4 * 3usize.pow(l - 1));
        }
    }

    #[test]
    fn shortlex_order_without_repeats() {
        let words: Vec<_> = enumerate_reduced(3, 4).collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        let first: Vec<String> = enumerate_reduced(2, 1).map(|w| w.to_string()).collect();
        assert_eq!(first, ["1", "a", "a'", "b", "b'"]);
    }
}
