"""Goal lexicon: word frequencies, the tempered goal prior, and the reversed
character n-gram used both to score how word-like a tower is and to sample
constrained completions of partial words.

Towers grow upward and a tower reading is a word *suffix*, so the n-gram is
trained and run over reversed words: it generates the last letter first. The
termination symbol gets an extra bias so longer completions are harder to
produce, mirroring how people struggle to guess long words.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .world import spellable, validate_word

END = "$"
ALPHABET = "abcdefghijklmnopqrstuvwxyz"
SYMBOLS = tuple(ALPHABET) + (END,)

DEFAULT_ORDER = 5
DEFAULT_WORD_TEMPERATURE = 4.0
DEFAULT_TERMINATION_BIAS = 0.05
DEFAULT_SMOOTHING = 0.01


class EmptySupportError(ValueError):
    """No lexicon word is spellable with the given blocks."""


class InfeasibleSuffixError(ValueError):
    """A tower reading cannot be completed into any available dictionary word."""


class Lexicon:
    """Mapping word -> raw corpus frequency (positive)."""

    def __init__(self, entries: Mapping[str, float]):
        self.entries: dict[str, float] = {}
        for word, freq in entries.items():
            validate_word(word)
            if freq <= 0:
                raise ValueError(f"frequency for {word!r} must be positive, got {freq}")
            self.entries[word] = float(freq)
        if not self.entries:
            raise ValueError("lexicon is empty")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def words(self) -> list[str]:
        return sorted(self.entries)

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        """Read a dictionary file: one ``word<TAB>frequency`` per line.

        Lines starting with ``#`` are comments; a bare word (no frequency
        column) gets frequency 1.0.
        """
        entries: dict[str, float] = {}
        for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            try:
                if len(parts) == 1:
                    entries[parts[0]] = 1.0
                elif len(parts) == 2:
                    entries[parts[0]] = float(parts[1])
                else:
                    raise ValueError("too many columns")
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad dictionary line {raw!r}") from exc
        return cls(entries)

    def save(self, path: str | Path) -> None:
        lines = [f"{w}\t{self.entries[w]:.8g}" for w in sorted(self.entries)]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def temper(frequencies: Mapping[str, float], word_temperature: float) -> dict[str, float]:
    """Flatten frequencies to weight ∝ freq^(1/T), normalized over the support."""
    if word_temperature < 1:
        raise ValueError(f"word temperature must be >= 1, got {word_temperature}")
    weights = {}
    for word, freq in frequencies.items():
        if freq <= 0:
            raise ValueError(f"non-positive frequency for {word!r}")
        weights[word] = freq ** (1.0 / word_temperature)
    total = sum(weights.values())
    return {w: v / total for w, v in weights.items()}


@dataclass(frozen=True)
class GoalPrior:
    """Tempered word probabilities restricted to one scenario's spellable words."""

    probs: dict[str, float]
    word_temperature: float

    @property
    def support(self) -> list[str]:
        return sorted(self.probs)

    def __getitem__(self, word: str) -> float:
        return self.probs.get(word, 0.0)

    def log(self, word: str) -> float:
        p = self.probs.get(word, 0.0)
        return math.log(p) if p > 0 else -math.inf


def goal_prior(
    lexicon: Lexicon,
    letters: Counter[str] | Mapping[str, int],
    word_temperature: float = DEFAULT_WORD_TEMPERATURE,
) -> GoalPrior:
    """Tempered prior over the lexicon words spellable from the given letters."""
    available = Counter(letters) if not isinstance(letters, Counter) else letters
    supported = {
        w: f for w, f in lexicon.entries.items() if spellable(w, available)
    }
    if not supported:
        raise EmptySupportError("no lexicon word is spellable with these blocks")
    return GoalPrior(temper(supported, word_temperature), word_temperature)


class Trie:
    """Trie over *reversed* dictionary words, for suffix-constrained completion.

    Walking the trie from the root consumes a word's letters last-first, which
    matches the order blocks are stacked (bottom block first).
    """

    __slots__ = ("children", "is_word")

    def __init__(self) -> None:
        self.children: dict[str, Trie] = {}
        self.is_word = False

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Trie":
        root = cls()
        for word in words:
            node = root
            for ch in reversed(word):
                node = node.children.setdefault(ch, cls())
            node.is_word = True
        return root

    def walk(self, reversed_prefix: str) -> "Trie | None":
        node = self
        for ch in reversed_prefix:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def completable(self, letters: Counter[str]) -> bool:
        """Can some word below this node be finished with the letters on hand?"""
        if self.is_word:
            return True
        for ch, child in self.children.items():
            if letters.get(ch, 0) > 0:
                letters[ch] -= 1
                ok = child.completable(letters)
                letters[ch] += 1
                if ok:
                    return True
        return False


class CharNGram:
    """Reversed character n-gram with a termination bias.

    Contexts are the most recent (up to order-1) generated characters, in
    generation order (reversed-word order). Seen contexts use their exact
    weighted counts; an unseen context backs off to its longest seen suffix
    and is add-delta smoothed there, so every conditional stays normalized.
    """

    def __init__(
        self,
        order: int,
        termination_bias: float = DEFAULT_TERMINATION_BIAS,
        smoothing: float = DEFAULT_SMOOTHING,
    ):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        if not (0 <= termination_bias < 1):
            raise ValueError(f"termination bias must be in [0, 1), got {termination_bias}")
        self.order = order
        self.termination_bias = termination_bias
        self.smoothing = smoothing
        self.counts: dict[str, dict[str, float]] = {}
        self._dist_cache: dict[tuple[str, bool], dict[str, float]] = {}

    def _add(self, context: str, symbol: str, weight: float) -> None:
        self.counts.setdefault(context, {})
        self.counts[context][symbol] = self.counts[context].get(symbol, 0.0) + weight

    def train(self, weighted_words: Mapping[str, float]) -> None:
        for word, weight in weighted_words.items():
            rev = word[::-1]
            for i, ch in enumerate(rev):
                self._add(rev[max(0, i - self.order + 1) : i], ch, weight)
            self._add(rev[max(0, len(rev) - self.order + 1) :], END, weight)
        self._dist_cache.clear()

    def conditional(self, context: str) -> dict[str, float]:
        """P(next symbol | context) over a-z plus the end marker."""
        context = context[-(self.order - 1) :] if self.order > 1 else ""
        backed_off = False
        while context not in self.counts:
            if not context:
                # Untrained model; uniform keeps the distribution well-defined.
                return {s: 1.0 / len(SYMBOLS) for s in SYMBOLS}
            context = context[1:]
            backed_off = True
        key = (context, backed_off)
        cached = self._dist_cache.get(key)
        if cached is not None:
            return cached
        table = self.counts[context]
        if backed_off:
            delta = self.smoothing
            total = sum(table.values()) + delta * len(SYMBOLS)
            dist = {s: (table.get(s, 0.0) + delta) / total for s in SYMBOLS}
        else:
            total = sum(table.values())
            dist = {s: table.get(s, 0.0) / total for s in SYMBOLS}
        self._dist_cache[key] = dist
        return dist

    def step_dist(self, generated: str, at_complete_word: bool) -> dict[str, float]:
        """Generation-time distribution after emitting ``generated`` so far.

        The end marker keeps its n-gram mass plus the termination bias, but
        only where stopping would leave a complete word; elsewhere its mass is
        renormalized away.
        """
        base = self.conditional(generated)
        eps = self.termination_bias
        if at_complete_word:
            out = {s: (1 - eps) * p for s, p in base.items()}
            out[END] = eps + (1 - eps) * base[END]
            return out
        live = 1.0 - (eps + (1 - eps) * base[END])
        if live <= 0:
            # Degenerate context that only ever terminated; spread uniformly.
            return {s: (1.0 / 26 if s != END else 0.0) for s in SYMBOLS}
        out = {s: (1 - eps) * p / live for s, p in base.items()}
        out[END] = 0.0
        return out

    def sequence_prob(self, suffix: str) -> float:
        """Probability of generating these characters (termination ignored).

        ``suffix`` is a tower reading (top-to-bottom); generation emits it
        bottom-up, i.e. reversed.
        """
        prob = 1.0
        rev = suffix[::-1]
        for i, ch in enumerate(rev):
            prob *= self.conditional(rev[:i]).get(ch, 0.0)
            if prob == 0.0:
                return 0.0
        return prob

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "termination_bias": self.termination_bias,
            "smoothing": self.smoothing,
            "counts": {ctx: dict(tab) for ctx, tab in sorted(self.counts.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CharNGram":
        model = cls(data["order"], data["termination_bias"], data["smoothing"])
        model.counts = {ctx: dict(tab) for ctx, tab in data["counts"].items()}
        return model

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "CharNGram":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def train_ngram(
    lexicon: Lexicon,
    order: int = DEFAULT_ORDER,
    word_temperature: float = DEFAULT_WORD_TEMPERATURE,
    termination_bias: float = DEFAULT_TERMINATION_BIAS,
    smoothing: float = DEFAULT_SMOOTHING,
) -> CharNGram:
    """Fit the reversed n-gram on the lexicon's tempered frequencies."""
    model = CharNGram(order, termination_bias, smoothing)
    model.train(temper(lexicon.entries, word_temperature))
    return model


def sample_completion(
    ngram: CharNGram,
    tower_reading: str,
    available_letters: Counter[str] | Mapping[str, int],
    trie: Trie,
    rng: np.random.Generator,
) -> tuple[str, float]:
    """Complete a tower reading into a dictionary word by prepending letters.

    Draws each next (reversed-order) character from the n-gram conditional
    restricted to trie branches that can still finish with the letters on
    hand, renormalized per step. Returns the sampled word together with the
    exact probability of the sampling path, so the caller can use it as an
    importance-weight denominator.
    """
    node = trie.walk(tower_reading[::-1])
    remaining = +Counter(available_letters)  # drop non-positive entries
    if node is None or not node.completable(remaining):
        raise InfeasibleSuffixError(
            f"no available completion for tower reading {tower_reading!r}"
        )
    word = tower_reading
    generated = tower_reading[::-1]
    path_prob = 1.0
    while True:
        options: dict[str, float] = {}
        step = ngram.step_dist(generated, at_complete_word=node.is_word)
        if node.is_word:
            options[END] = step[END]
        for ch, child in node.children.items():
            if remaining.get(ch, 0) > 0:
                remaining[ch] -= 1
                if child.completable(remaining):
                    options[ch] = step[ch]
                remaining[ch] += 1
        total = sum(options.values())
        if total <= 0:
            # Reachable only if smoothing is disabled below a feasible branch;
            # fall back to a uniform choice over the feasible options.
            options = {s: 1.0 for s in options}
            total = float(len(options))
        symbols = sorted(options)
        probs = np.array([options[s] / total for s in symbols])
        choice = symbols[rng.choice(len(symbols), p=probs)]
        path_prob *= options[choice] / total
        if choice == END:
            return word, path_prob
        word = choice + word
        generated += choice
        remaining[choice] -= 1
        node = node.children[choice]
