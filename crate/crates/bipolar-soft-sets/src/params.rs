//! Parameters, their negations, and ordered parameter spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::validate_label;

/// A parameter together with its opposite-meaning twin.
///
/// Every parameter `e` ("cheap", say) is paired with a negation `¬e`
/// ("expensive"). Negating twice gets back to `e`, so a single struct
/// carrying both labels represents the pair; which side counts as positive
/// is a choice made once, at construction.
///
/// ```
/// use bipolar_soft_sets::Parameter;
///
/// let p = Parameter::new("modern")?;
/// assert_eq!(p.negation(), "not_modern");
///
/// let q = Parameter::with_negation("cheap", "expensive")?;
/// assert_eq!(q.token(), "cheap/expensive");
/// # Ok::<(), bipolar_soft_sets::Error>(())
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parameter {
    positive: String,
    negation: String,
}

impl Parameter {
    /// A parameter whose negation label is the derived default
    /// `not_<label>`.
    pub fn new(positive: impl Into<String>) -> Result<Parameter> {
        let positive = positive.into();
        validate_label(&positive)?;
        let negation = format!("not_{positive}");
        Ok(Parameter { positive, negation })
    }

    /// A parameter with an explicit negation label.
    pub fn with_negation(
        positive: impl Into<String>,
        negation: impl Into<String>,
    ) -> Result<Parameter> {
        let positive = positive.into();
        let negation = negation.into();
        validate_label(&positive)?;
        validate_label(&negation)?;
        if positive == negation {
            return Err(Error::InvalidIdentifier {
                label: positive,
                reason: "a parameter and its negation need distinct labels",
            });
        }
        Ok(Parameter { positive, negation })
    }

    /// Parses a `pos` or `pos/neg` token, the spelling used by the file
    /// formats.
    pub fn parse_token(token: &str) -> Result<Parameter> {
        match token.split_once('/') {
            Some((pos, neg)) => Parameter::with_negation(pos, neg),
            None => Parameter::new(token),
        }
    }

    /// The positive-side label.
    pub fn positive(&self) -> &str {
        &self.positive
    }

    /// The negation-side label.
    pub fn negation(&self) -> &str {
        &self.negation
    }

    /// Whether the negation label is the derived default.
    pub fn has_default_negation(&self) -> bool {
        self.negation == format!("not_{}", self.positive)
    }

    /// The paired parameter for two parameters `a` and `b`: positive label
    /// `(a,b)`, negation `(¬a,¬b)`. Negating a pair negates both halves, so
    /// double negation is still the identity.
    pub fn product(&self, other: &Parameter) -> Parameter {
        Parameter {
            positive: format!("({},{})", self.positive, other.positive),
            negation: format!("({},{})", self.negation, other.negation),
        }
    }

    /// The token that reproduces this parameter when parsed back: `pos`
    /// when the negation is the default, `pos/neg` otherwise.
    pub fn token(&self) -> String {
        if self.has_default_negation() {
            self.positive.clone()
        } else {
            format!("{}/{}", self.positive, self.negation)
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.positive)
    }
}

/// The ordered ambient set of parameters a dataset ranges over — the pool
/// every domain is drawn from.
///
/// Two sets can only be combined when they use equal spaces (same label
/// pairs in the same order); the space is what gives "union of domains" its
/// meaning.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterSpace {
    params: Vec<Parameter>,
}

impl ParameterSpace {
    /// Builds a space, checking that positive labels, negation labels, and
    /// the two label sets together are pairwise distinct.
    pub fn new<I>(params: I) -> Result<ParameterSpace>
    where
        I: IntoIterator<Item = Parameter>,
    {
        let params: Vec<Parameter> = params.into_iter().collect();
        for (i, p) in params.iter().enumerate() {
            for q in &params[..i] {
                if p.positive() == q.positive() {
                    return Err(Error::DuplicateIdentifier(p.positive().to_owned()));
                }
                if p.negation() == q.negation() {
                    return Err(Error::DuplicateIdentifier(p.negation().to_owned()));
                }
            }
        }
        for p in &params {
            for q in &params {
                if p.positive() == q.negation() {
                    return Err(Error::DuplicateIdentifier(p.positive().to_owned()));
                }
            }
        }
        Ok(ParameterSpace { params })
    }

    /// Convenience constructor from `pos` / `pos/neg` tokens.
    ///
    /// ```
    /// use bipolar_soft_sets::ParameterSpace;
    ///
    /// let space = ParameterSpace::from_tokens(["cheap/expensive", "modern"])?;
    /// assert_eq!(space.get(1).negation(), "not_modern");
    /// # Ok::<(), bipolar_soft_sets::Error>(())
    /// ```
    pub fn from_tokens<I, S>(tokens: I) -> Result<ParameterSpace>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let params = tokens
            .into_iter()
            .map(|t| Parameter::parse_token(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        ParameterSpace::new(params)
    }

    /// Number of parameters.
    pub fn len(&self) -> usize {
        self.params.len()
    }

    /// True when the space has no parameters.
    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// The parameter at a given position.
    ///
    /// # Panics
    ///
    /// Panics when `index` is out of range.
    pub fn get(&self, index: usize) -> &Parameter {
        &self.params[index]
    }

    /// Iterates over the parameters in space order.
    pub fn iter(&self) -> impl Iterator<Item = &Parameter> {
        self.params.iter()
    }

    /// Position of a positive label, if present.
    pub fn index_of(&self, positive_label: &str) -> Option<usize> {
        self.params.iter().position(|p| p.positive() == positive_label)
    }

    /// Position of a positive label, or [`Error::UnknownParameter`].
    pub fn require(&self, positive_label: &str) -> Result<usize> {
        self.index_of(positive_label)
            .ok_or_else(|| Error::UnknownParameter(positive_label.to_owned()))
    }
}
