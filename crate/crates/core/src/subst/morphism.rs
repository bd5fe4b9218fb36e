use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::words::{Alphabet, Word};

use super::{IncidenceMatrix, SubstError};

/// A monoid morphism given by the image of each source letter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Vec<u8>>,
}

/// A fixed point of `φ^power` grown from `seed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub seed: u8,
    pub power: usize,
    pub prefix: Word,
}

impl Morphism {
    pub fn new(
        source: Alphabet,
        target: Alphabet,
        images: Vec<Vec<u8>>,
    ) -> Result<Self, SubstError> {
        if images.len() != source.len() {
            return Err(SubstError::DimensionMismatch {
                expected: source.len(),
                found: images.len(),
            });
        }
        for (i, image) in images.iter().enumerate() {
            if image.iter().any(|&l| l as usize >= target.len()) {
                return Err(SubstError::LetterOutsideTarget {
                    letter: source.letter(i as u8),
                });
            }
            if image.is_empty() && source == target {
                return Err(SubstError::EmptyImage {
                    letter: source.letter(i as u8),
                });
            }
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.len() as u8).map(|l| vec![l]).collect();
        Morphism {
            source: alphabet.clone(),
            target: alphabet,
            images,
        }
    }

    /// `σ`: `A → 0`, `B → 01`, `C → 1`.
    pub fn sigma() -> Self {
        Morphism {
            source: Alphabet::ternary(),
            target: Alphabet::binary(),
            images: vec![vec![0], vec![0, 1], vec![1]],
        }
    }

    /// `σ′`: `A → 0`, `B → 10`, `C → 1`.
    pub fn sigma_prime() -> Self {
        Morphism {
            source: Alphabet::ternary(),
            target: Alphabet::binary(),
            images: vec![vec![0], vec![1, 0], vec![1]],
        }
    }

    /// Parses `"A>AB;B>AC;C>A"`. The source alphabet is the sorted list of
    /// left-hand letters; the target is the same alphabet when every image
    /// letter belongs to it and the sorted list of image letters otherwise.
    pub fn parse(text: &str) -> Result<Self, SubstError> {
        let err = |position: usize, reason: &'static str| SubstError::Parse { position, reason };
        let mut rules: Vec<(char, Vec<char>)> = Vec::new();
        let mut offset = 0;
        for rule in text.split(';') {
            let mut chars = rule.char_indices().filter(|(_, c)| !c.is_whitespace());
            let (_, letter) = chars.next().ok_or(err(offset, "expected a letter"))?;
            if !letter.is_ascii_alphanumeric() {
                return Err(err(offset, "letters must be ASCII letters or digits"));
            }
            match chars.next() {
                Some((_, '>')) => {}
                Some((i, _)) => return Err(err(offset + i, "expected '>'")),
                None => return Err(err(offset + rule.len(), "expected '>'")),
            }
            let mut image = Vec::new();
            for (i, c) in chars {
                if !c.is_ascii_alphanumeric() {
                    return Err(err(offset + i, "letters must be ASCII letters or digits"));
                }
                image.push(c);
            }
            if image.is_empty() {
                return Err(err(offset + rule.len(), "image must be non-empty"));
            }
            if rules.iter().any(|(l, _)| *l == letter) {
                return Err(err(offset, "letter defined twice"));
            }
            rules.push((letter, image));
            offset += rule.len() + 1;
        }
        rules.sort_by_key(|(l, _)| *l);
        let source = Alphabet::new(rules.iter().map(|(l, _)| *l)).expect("letters are distinct");
        let target = if rules
            .iter()
            .flat_map(|(_, img)| img)
            .all(|c| source.index_of(*c).is_some())
        {
            source.clone()
        } else {
            let mut letters: Vec<char> = rules
                .iter()
                .flat_map(|(_, img)| img.iter().copied())
                .collect();
            letters.sort_unstable();
            letters.dedup();
            Alphabet::new(letters).expect("deduplicated")
        };
        let images = rules
            .iter()
            .map(|(_, img)| {
                img.iter()
                    .map(|c| target.index_of(*c).expect("collected above"))
                    .collect()
            })
            .collect();
        Morphism::new(source, target, images)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    /// Source and target coincide and no image is empty.
    pub fn is_substitution(&self) -> bool {
        self.source == self.target && self.images.iter().all(|img| !img.is_empty())
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }

    pub(crate) fn apply_letters(&self, letters: &[u8]) -> Vec<u8> {
        let mut out =
            Vec::with_capacity(letters.iter().map(|&l| self.images[l as usize].len()).sum());
        for &l in letters {
            out.extend_from_slice(&self.images[l as usize]);
        }
        out
    }

    pub fn apply(&self, w: &Word) -> Result<Word, SubstError> {
        w.expect_alphabet(&self.source)?;
        Ok(
            Word::new(self.target.clone(), self.apply_letters(w.letters()))
                .expect("images lie in the target"),
        )
    }

    /// `self ∘ inner`: apply `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism, SubstError> {
        if inner.target != self.source {
            return Err(SubstError::AlphabetMismatch {
                expected: self.source.to_string(),
                found: inner.target.to_string(),
            });
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply_letters(img))
            .collect();
        Ok(Morphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    pub fn power(&self, k: usize) -> Result<Morphism, SubstError> {
        if self.source != self.target {
            return Err(SubstError::NotASubstitution);
        }
        let mut result = Morphism::identity(self.source.clone());
        for _ in 0..k {
            result = self.compose(&result)?;
        }
        Ok(result)
    }

    /// `(M)_{ij} = |φ(a_i)|_{a_j}`, rows indexed by source letters.
    pub fn incidence(&self) -> IncidenceMatrix {
        let rows = self
            .images
            .iter()
            .map(|img| {
                let mut row = vec![0i64; self.target.len()];
                for &l in img {
                    row[l as usize] += 1;
                }
                row
            })
            .collect();
        IncidenceMatrix::new(rows).expect("rows have the target's width")
    }

    /// The seed and the least power `k ≤ |alphabet|` such that `φ^k(seed)`
    /// begins with `seed` and has length at least 2. Without a seed, letters
    /// are tried in alphabet order for `k = 1`, then for `k = 2`, and so on.
    pub fn fixed_point_seed(&self, seed: Option<u8>) -> Result<(u8, usize), SubstError> {
        if !self.is_substitution() {
            return Err(SubstError::NotASubstitution);
        }
        let seeds: Vec<u8> = match seed {
            Some(s) if (s as usize) < self.source.len() => vec![s],
            Some(_) => return Err(SubstError::NoFixedPoint),
            None => (0..self.source.len() as u8).collect(),
        };
        let mut power = self.clone();
        for k in 1..=self.source.len() {
            for &s in &seeds {
                let img = power.image(s);
                if img[0] == s && img.len() >= 2 {
                    return Ok((s, k));
                }
            }
            power = self.compose(&power)?;
        }
        Err(SubstError::NoFixedPoint)
    }

    /// The first `n` letters of the fixed point of `φ^k` grown from the seed
    /// chosen by [`Morphism::fixed_point_seed`].
    pub fn fixed_point(&self, seed: Option<u8>, n: usize) -> Result<FixedPoint, SubstError> {
        let (seed, power) = self.fixed_point_seed(seed)?;
        let iterate = self.power(power)?;
        // u = ψ(u) gives u[..|ψ(u[..i])|] = ψ(u[..i]); read and expand one letter at a time.
        let mut letters = vec![seed];
        let mut read = 0;
        while letters.len() < n {
            let next = letters[read];
            let image = iterate.image(next);
            if read == 0 {
                letters.extend_from_slice(&image[1..]);
            } else {
                letters.extend_from_slice(image);
            }
            read += 1;
        }
        letters.truncate(n);
        let prefix = Word::new(self.source.clone(), letters).expect("letters come from images");
        Ok(FixedPoint {
            seed,
            power,
            prefix,
        })
    }

    pub fn fixed_point_prefix(&self, seed: Option<u8>, n: usize) -> Result<Word, SubstError> {
        Ok(self.fixed_point(seed, n)?.prefix)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}>", self.source.letter(i as u8))?;
            for &l in img {
                write!(f, "{}", self.target.letter(l))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Morphism {
    type Err = SubstError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Morphism::parse(s)
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Positions `n` in `σ(u)` of the letter `1` coming from an image `σ(B) = 01`.
pub fn b_image_positions(u: &Word) -> Result<Vec<usize>, SubstError> {
    u.expect_alphabet(&Alphabet::ternary())?;
    let mut positions = Vec::new();
    let mut at = 0;
    for &l in u.letters() {
        if l == crate::words::B {
            positions.push(at + 1);
            at += 2;
        } else {
            at += 1;
        }
    }
    Ok(positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_images() {
        let u = Word::ternary("AACAB").unwrap();
        assert_eq!(Morphism::sigma().apply(&u).unwrap().to_string(), "001001");
        assert_eq!(
            Morphism::sigma_prime()
                .apply(&Word::ternary("B").unwrap())
                .unwrap()
                .to_string(),
            "10"
        );
        assert!(Morphism::sigma()
            .apply(&Word::empty(Alphabet::ternary()))
            .unwrap()
            .is_empty());
        assert_eq!(Morphism::sigma().to_string(), "A>0;B>01;C>1");
    }

    #[test]
    fn parse_and_print() {
        let m: Morphism = "A>AB;B>AC;C>A".parse().unwrap();
        assert_eq!(m.to_string(), "A>AB;B>AC;C>A");
        assert!(m.is_substitution());
        let m: Morphism = "C>A; A>AB ;B>C".parse().unwrap();
        assert_eq!(m.to_string(), "A>AB;B>C;C>A");
        assert!(matches!(
            Morphism::parse("A>"),
            Err(SubstError::Parse { .. })
        ));
        assert!(Morphism::parse("A>B;A>A").is_err());
        assert!(Morphism::parse("AB").is_err());
        assert!(Morphism::parse("").is_err());
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            Morphism::sigma().incidence().rows(),
            vec![vec![1, 0], vec![1, 1], vec![0, 1]]
        );
        let fib: Morphism = "A>AB;B>A".parse().unwrap();
        assert_eq!(fib.incidence().rows(), vec![vec![1, 1], vec![1, 0]]);
        let id = Morphism::identity(Alphabet::ternary());
        assert_eq!(id.incidence(), IncidenceMatrix::identity(3));
    }

    #[test]
    fn composition_order() {
        let m1: Morphism = "A>AB;B>C;C>A".parse().unwrap();
        let m2: Morphism = "A>AC;B>B;C>BA".parse().unwrap();
        let composed = m1.compose(&m2).unwrap();
        let w = Word::ternary("ABCCAB").unwrap();
        assert_eq!(
            composed.apply(&w).unwrap(),
            m1.apply(&m2.apply(&w).unwrap()).unwrap()
        );
        // Row-indexed incidence: M_{m1∘m2} = M_{m2} · M_{m1}.
        assert_eq!(
            composed.incidence(),
            m2.incidence().mul(&m1.incidence()).unwrap()
        );
        let counts = composed.apply(&w).unwrap().counts();
        let expected = IncidenceMatrix::new(vec![w.counts().iter().map(|&c| c as i64).collect()])
            .unwrap()
            .mul(&composed.incidence())
            .unwrap();
        assert_eq!(
            expected.rows()[0],
            counts.iter().map(|&c| c as i64).collect::<Vec<_>>()
        );
        let sigma_after = Morphism::sigma().compose(&m1).unwrap();
        assert_eq!(
            sigma_after.incidence(),
            m1.incidence().mul(&Morphism::sigma().incidence()).unwrap()
        );
    }

    #[test]
    fn fixed_points() {
        let fib: Morphism = "0>01;1>0".parse().unwrap();
        assert_eq!(
            fib.fixed_point_prefix(Some(0), 8).unwrap().to_string(),
            "01001010"
        );
        assert_eq!(fib.fixed_point_prefix(None, 1).unwrap().to_string(), "0");
        let swap: Morphism = "A>B;B>A".parse().unwrap();
        assert_eq!(
            swap.fixed_point_prefix(None, 5),
            Err(SubstError::NoFixedPoint)
        );
        let id = Morphism::identity(Alphabet::ternary());
        assert_eq!(
            id.fixed_point_prefix(None, 5),
            Err(SubstError::NoFixedPoint)
        );
        // Only φ² fixes a word here.
        let alternating: Morphism = "A>BA;B>AB".parse().unwrap();
        let fp = alternating.fixed_point(None, 8).unwrap();
        assert_eq!((fp.seed, fp.power), (0, 2));
        assert_eq!(fp.prefix.to_string(), "ABBABAAB");
        assert_eq!(
            alternating
                .power(2)
                .unwrap()
                .apply(&fp.prefix)
                .unwrap()
                .prefix(8),
            fp.prefix
        );
    }

    #[test]
    fn b_positions() {
        let u = Word::ternary("AACAB").unwrap();
        assert_eq!(b_image_positions(&u).unwrap(), vec![5]);
        assert_eq!(
            b_image_positions(&Word::ternary("B").unwrap()).unwrap(),
            vec![1]
        );
    }
}
