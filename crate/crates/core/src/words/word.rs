use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Letter indices of the ternary alphabet `{A, B, C}`.
pub const A: u8 = 0;
pub const B: u8 = 1;
pub const C: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter '{letter}' at position {position} is not in the alphabet {alphabet}")]
    LetterOutsideAlphabet {
        letter: char,
        position: usize,
        alphabet: String,
    },
    #[error("cannot infer an alphabet: expected letters from {{A,B,C}} or {{0,1}}, found '{0}'")]
    UnknownAlphabet(char),
    #[error("empty input word")]
    Empty,
    #[error("alphabet letter '{0}' is repeated")]
    DuplicateLetter(char),
    #[error("expected a word over {expected}, got one over {found}")]
    WrongAlphabet { expected: String, found: String },
}

/// An ordered list of distinct letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, WordError> {
        let letters: Vec<char> = letters.into_iter().collect();
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(WordError::DuplicateLetter(*c));
            }
        }
        Ok(Alphabet(letters))
    }

    pub fn ternary() -> Self {
        Alphabet(vec!['A', 'B', 'C'])
    }

    pub fn binary() -> Self {
        Alphabet(vec!['0', '1'])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.0.iter().position(|&x| x == c).map(|i| i as u8)
    }

    pub fn letter(&self, index: u8) -> char {
        self.0[index as usize]
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite word stored as letter indices into its alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<u8>) -> Result<Self, WordError> {
        if let Some(position) = letters.iter().position(|&l| l as usize >= alphabet.len()) {
            return Err(WordError::LetterOutsideAlphabet {
                letter: '?',
                position,
                alphabet: alphabet.to_string(),
            });
        }
        Ok(Word { alphabet, letters })
    }

    pub(crate) fn from_indices_unchecked(alphabet: Alphabet, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Word { alphabet, letters }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, WordError> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(position, letter)| {
                alphabet
                    .index_of(letter)
                    .ok_or_else(|| WordError::LetterOutsideAlphabet {
                        letter,
                        position,
                        alphabet: alphabet.to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    /// Parses a non-empty word, choosing `{A,B,C}` or `{0,1}` from its letters.
    pub fn infer(text: &str) -> Result<Self, WordError> {
        let first = text.chars().next().ok_or(WordError::Empty)?;
        let alphabet = match first {
            'A' | 'B' | 'C' => Alphabet::ternary(),
            '0' | '1' => Alphabet::binary(),
            other => return Err(WordError::UnknownAlphabet(other)),
        };
        Word::parse(text, &alphabet)
    }

    pub fn ternary(text: &str) -> Result<Self, WordError> {
        Word::parse(text, &Alphabet::ternary())
    }

    pub fn binary(text: &str) -> Result<Self, WordError> {
        Word::parse(text, &Alphabet::binary())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_ternary(&self) -> bool {
        self.alphabet == Alphabet::ternary()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet == Alphabet::binary()
    }

    pub fn expect_alphabet(&self, expected: &Alphabet) -> Result<(), WordError> {
        if &self.alphabet == expected {
            Ok(())
        } else {
            Err(WordError::WrongAlphabet {
                expected: expected.to_string(),
                found: self.alphabet.to_string(),
            })
        }
    }

    /// Letter counts (the abelianization), indexed like the alphabet.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet.len()];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        counts
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters[..n.min(self.len())].to_vec(),
        }
    }

    pub fn push(&mut self, letter: u8) {
        assert!(
            (letter as usize) < self.alphabet.len(),
            "letter index out of range"
        );
        self.letters.push(letter);
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.alphabet == other.alphabet && other.letters.starts_with(&self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .letters
            .iter()
            .map(|&l| self.alphabet.letter(l))
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() > 64 {
            write!(f, "Word({}…, len {})", self.prefix(64), self.len())
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::infer(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
