"""
Letters, alphabets and virtual alphabets A - B.

A letter is an integer linear form in the ring variables, treated as one
atom: [2x] is a single letter of value 2x, never two copies of x. The integer
alphabet int:n is n copies of the letter 1.
"""
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from schur.services.exceptions import UnknownAlphabetSpecException, UnsupportedProductException
from schur.services.poly_core import MPoly, RING, VARIABLE_INDEX, variable

_LETTER_TERM = re.compile(r"([+-]?)(\d*)([a-z][a-z0-9]*)?")
_INDEXED_SPEC = re.compile(r"^([ABY])_?(\d+)$")
_COPIES_SPEC = re.compile(r"^(\d+)([a-z][a-z0-9]*)$")


@dataclass(frozen=True, order=True)
class Letter:
    constant: int = 0
    form: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        merged: dict[str, int] = {}
        for name, coeff in self.form:
            if name not in VARIABLE_INDEX:
                variable(name)
            merged[name] = merged.get(name, 0) + coeff
        form = tuple(sorted(((name, coeff) for name, coeff in merged.items() if coeff),
                            key=lambda item: VARIABLE_INDEX[item[0]]))
        object.__setattr__(self, "form", form)

    @classmethod
    def variable(cls, name: str) -> 'Letter':
        return cls(0, ((name, 1),))

    @classmethod
    def boxed_integer(cls, value: int) -> 'Letter':
        return cls(value)

    @classmethod
    def linear(cls, coefficients: dict[str, int], constant: int = 0) -> 'Letter':
        return cls(constant, tuple(coefficients.items()))

    @classmethod
    def parse(cls, text: str) -> 'Letter':
        """Parses '2x', 'x1+x2', '-b1', '3', '2x1-x2+1'."""
        text = text.replace(" ", "")
        if not text:
            raise UnknownAlphabetSpecException(text)
        coefficients: dict[str, int] = {}
        constant = 0
        position = 0
        while position < len(text):
            match = _LETTER_TERM.match(text, position)
            if match is None or match.end() == position:
                raise UnknownAlphabetSpecException(text)
            sign, digits, name = match.groups()
            if not digits and not name:
                raise UnknownAlphabetSpecException(text)
            value = int(digits) if digits else 1
            value = -value if sign == "-" else value
            if name:
                if name not in VARIABLE_INDEX:
                    raise UnknownAlphabetSpecException(text)
                coefficients[name] = coefficients.get(name, 0) + value
            else:
                constant += value
            position = match.end()
        return cls.linear(coefficients, constant)

    @property
    def is_constant(self) -> bool:
        return not self.form

    @property
    def is_variable(self) -> bool:
        return self.constant == 0 and len(self.form) == 1 and self.form[0][1] == 1

    @cached_property
    def poly(self) -> MPoly:
        value = RING(self.constant)
        for name, coeff in self.form:
            value = value + coeff * variable(name)
        return value

    def negate(self) -> 'Letter':
        return self.scale(-1)

    def scale(self, factor: int) -> 'Letter':
        return Letter(self.constant * factor, tuple((name, coeff * factor) for name, coeff in self.form))

    def times(self, other: 'Letter') -> 'Letter':
        if other.is_constant:
            return self.scale(other.constant)
        if self.is_constant:
            return other.scale(self.constant)
        raise UnsupportedProductException(f"{UnsupportedProductException.default_detail}: "
                                          f"({self}) * ({other})")

    def __str__(self):
        pieces = []
        for name, coeff in self.form:
            match coeff:
                case 1:
                    piece = f"+{name}"
                case -1:
                    piece = f"-{name}"
                case _:
                    piece = f"{coeff:+d}{name}"
            pieces.append(piece)
        if self.constant or not pieces:
            pieces.append(f"{self.constant:+d}")
        return "".join(pieces).lstrip("+")


@dataclass(frozen=True)
class Alphabet:
    """Finite multiset of letters, stored sorted so equal multisets compare equal."""
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(sorted(self.letters)))

    @classmethod
    def of(cls, *letters: Letter | str) -> 'Alphabet':
        return cls(tuple(letter if isinstance(letter, Letter) else Letter.parse(letter)
                         for letter in letters))

    @classmethod
    def variables(cls, *names: str) -> 'Alphabet':
        return cls(tuple(Letter.variable(name) for name in names))

    @classmethod
    def boxed(cls, *values: int) -> 'Alphabet':
        return cls(tuple(Letter.boxed_integer(value) for value in values))

    @classmethod
    def integer(cls, copies: int) -> 'Alphabet':
        if copies < 0:
            raise UnknownAlphabetSpecException(f"int:{copies}")
        return cls(tuple(Letter.boxed_integer(1) for _ in range(copies)))

    @classmethod
    def empty(cls) -> 'Alphabet':
        return cls()

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: 'Alphabet') -> 'Alphabet':
        return alphabet_sum(self, other)

    def polys(self) -> list[MPoly]:
        return [letter.poly for letter in self.letters]

    def star(self) -> 'Alphabet':
        return Alphabet(tuple(letter.negate() for letter in self.letters))

    def __str__(self):
        if not self.letters:
            return "0"
        return " + ".join(letter_text(letter) for letter in self.letters)


def letter_text(letter: Letter) -> str:
    """Alphabet syntax of one letter: plain variables bare, everything else boxed."""
    return str(letter) if letter.is_variable else f"[{letter}]"


@dataclass(frozen=True)
class VirtualAlphabet:
    """The formal difference plus - minus. Common letters are never cancelled."""
    plus: Alphabet = field(default_factory=Alphabet)
    minus: Alphabet = field(default_factory=Alphabet)

    @property
    def cardinalities(self) -> tuple[int, int]:
        return len(self.plus), len(self.minus)

    def __neg__(self) -> 'VirtualAlphabet':
        return VirtualAlphabet(self.minus, self.plus)

    def __add__(self, other: 'VirtualAlphabet') -> 'VirtualAlphabet':
        return VirtualAlphabet(self.plus + other.plus, self.minus + other.minus)

    def star(self) -> 'VirtualAlphabet':
        return VirtualAlphabet(self.plus.star(), self.minus.star())

    def __str__(self):
        if not self.plus.letters and not self.minus.letters:
            return "0"
        text = str(self.plus) if self.plus.letters else ""
        for letter in self.minus:
            text += f" - {letter_text(letter)}"
        return text.strip()


def alphabet_sum(a: Alphabet, b: Alphabet) -> Alphabet:
    return Alphabet(a.letters + b.letters)


def alphabet_scale(a: Alphabet, v: Letter | int | str) -> Alphabet:
    if isinstance(v, int):
        v = Letter.boxed_integer(v)
    elif isinstance(v, str):
        v = Letter.parse(v)
    return Alphabet(tuple(letter.times(v) for letter in a.letters))


def virtual(a: Alphabet | None = None, b: Alphabet | None = None) -> VirtualAlphabet:
    return VirtualAlphabet(a if a is not None else Alphabet(), b if b is not None else Alphabet())


def standard_alphabets(name: str, size: int | None = None) -> Alphabet:
    """
    Named alphabets: B<n> = (b1..bn), A<n>, Y<n>, X2 = (x1, x2),
    E = [2x1] + [2x2] and D = E + [x1+x2]. The size may be given inside
    the name ('B3') or separately ('B', 3).
    """
    if size is not None and name in ("A", "B", "Y"):
        name = f"{name}{size}"
    if indexed := _INDEXED_SPEC.match(name):
        family, count = indexed.group(1).lower(), int(indexed.group(2))
        return Alphabet.variables(*(f"{family}{n}" for n in range(1, count + 1)))
    match name:
        case "X2" | "X":
            return Alphabet.variables("x1", "x2")
        case "E":
            return Alphabet.of("2x1", "2x2")
        case "D":
            return Alphabet.of("2x1", "2x2", "x1+x2")
    raise UnknownAlphabetSpecException(name)


def _parse_summand(text: str) -> Alphabet:
    if text in ("0", "", "∅"):
        return Alphabet.empty()
    if text.startswith("[") and text.endswith("]"):
        return Alphabet.of(Letter.parse(text[1:-1]))
    if text.startswith("int:"):
        copies = text[4:]
        if not copies.isdigit():
            raise UnknownAlphabetSpecException(text)
        return Alphabet.integer(int(copies))
    if text.isdigit():
        return Alphabet.integer(int(text))
    if text[0].isupper():
        return standard_alphabets(text)
    if copies := _COPIES_SPEC.match(text):
        letter = Letter.parse(copies.group(2))
        return Alphabet(tuple(letter for _ in range(int(copies.group(1)))))
    return Alphabet.of(Letter.parse(text))


def _split_summands(text: str) -> Iterable[tuple[str, str]]:
    text = re.sub(r"\[([^\]]*)\]", lambda m: "[" + m.group(1).replace(" ", "") + "]", text.strip())
    sign = "+"
    if text.startswith("-"):
        sign, text = "-", text[1:].strip()
    elif text.startswith("+"):
        text = text[1:].strip()
    pieces = re.split(r"\s+([+-])\s+", text)
    yield sign, pieces[0]
    for position in range(1, len(pieces), 2):
        yield pieces[position], pieces[position + 1]


def parse_virtual_alphabet(text: str) -> VirtualAlphabet:
    """
    Parses 'X2 - [2x1] - [2x2] - B1'. Summands are separated by a spaced
    ' + ' or ' - '; 'x1+x2' without spaces is one composite letter.
    """
    plus, minus = Alphabet(), Alphabet()
    for sign, summand in _split_summands(text):
        alphabet = _parse_summand(summand)
        if sign == "+":
            plus = plus + alphabet
        else:
            minus = minus + alphabet
    return VirtualAlphabet(plus, minus)
