"""scikit-learn style wrappers around the functional core.

Transformers map a :class:`FactorLanguage` to a new one, so they chain in a
``sklearn.pipeline.Pipeline``; the analyzers store their result on ``fit``.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .complexity import complexity_profile
from .dendricity import dendricity_scan
from .transforms import alphabetic_image, bifix_decode, higher_block, sliding_block_image
from .validation import check_language


class HigherBlockCoder(TransformerMixin, BaseEstimator):
    def __init__(self, k=2, names=None, rename=False):
        self.k = k
        self.names = names
        self.rename = rename

    def fit(self, X, y=None):
        check_language(X).require(self.k, f"the {self.k}-block coding")
        self.source_alphabet_ = X.alphabet
        return self

    def transform(self, X):
        return higher_block(check_language(X), self.k, self.names, self.rename)


class AlphabeticImage(TransformerMixin, BaseEstimator):
    def __init__(self, morphism=None):
        self.morphism = morphism

    def fit(self, X, y=None):
        check_language(X)
        return self

    def transform(self, X):
        return alphabetic_image(check_language(X), self.morphism)


class BifixDecoder(TransformerMixin, BaseEstimator):
    def __init__(self, code=None, coding=None):
        self.code = code
        self.coding = coding

    def fit(self, X, y=None):
        check_language(X)
        return self

    def transform(self, X):
        return bifix_decode(check_language(X), self.code, self.coding)


class SlidingBlockCoder(TransformerMixin, BaseEstimator):
    def __init__(self, window=(0, 0), block_map=None):
        self.window = window
        self.block_map = block_map

    def fit(self, X, y=None):
        check_language(X)
        return self

    def transform(self, X):
        return sliding_block_image(check_language(X), tuple(self.window), self.block_map)


class DendricityScanner(BaseEstimator):
    """Runs a dendricity scan; ``predict`` returns the status string."""

    def __init__(self, max_len=8):
        self.max_len = max_len

    def fit(self, X, y=None):
        self.verdict_ = dendricity_scan(check_language(X), self.max_len)
        self.threshold_ = self.verdict_.threshold_estimate
        self.status_ = self.verdict_.status
        return self

    def predict(self, X):
        return dendricity_scan(check_language(X), self.max_len).status


class ComplexityProfiler(BaseEstimator):
    def fit(self, X, y=None):
        self.profile_ = complexity_profile(check_language(X))
        return self

    def transform(self, X=None):
        check_is_fitted(self, "profile_")
        return self.profile_
