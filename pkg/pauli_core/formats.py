"""
Text formats for spectra, dense operators and truth tables.

Spectrum::

    # comment
    n=3
    XZI  0.25
    ZZZ  0.1+0.2i

Dense operator (one matrix row per line, row-major)::

    dense n=1
    (1, 0) (0, 0)
    (0, 0) (-1, 0)

Truth table: a single bitstring of length 2^n, index = big-endian input.
"""

import hashlib
import re
from pathlib import Path

import numpy as np

from qbflab.exceptions import InputFormatError

from .operators import DenseOperator
from .paulis import PauliString
from .spectra import Spectrum

SPECTRUM = "spectrum"
DENSE = "dense"
TABLE = "table"
KIND_CHOICES = (SPECTRUM, DENSE, TABLE)

_PAIR = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")
_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_number(token: str) -> complex:
    token = token.strip()
    try:
        if token.endswith("i"):
            return complex(token[:-1] + "j")
        return complex(float(token))
    except ValueError:
        raise InputFormatError(f"Cannot parse coefficient {token!r}") from None


def format_number(value) -> str:
    value = complex(value)
    if value.imag == 0:
        return f"{value.real:.17g}"
    return f"{value.real:.17g}{value.imag:+.17g}i"


def detect_kind(text: str) -> str:
    first = next(_content_lines(text), None)
    if first is None:
        raise InputFormatError("Input is empty")
    if first.lower().startswith("dense"):
        return DENSE
    if _HEADER.match(first.replace(" ", "")):
        return SPECTRUM
    if set(first) <= {"0", "1"}:
        return TABLE
    raise InputFormatError(f"Cannot detect input kind from header {first!r}")


def parse_spectrum(text: str) -> Spectrum:
    lines = list(_content_lines(text))
    if not lines:
        raise InputFormatError("Spectrum file is empty")
    header = _HEADER.match(lines[0].replace(" ", ""))
    if not header:
        raise InputFormatError(f"Spectrum file must start with 'n=<qubits>', got {lines[0]!r}")
    n = int(header.group(1))

    coeffs = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"Expected 'WORD coefficient', got {line!r}")
        key = PauliString.from_label(parts[0])
        if key.n != n:
            raise InputFormatError(f"Word {parts[0]} does not have n={n} symbols")
        coeffs[key] = coeffs.get(key, 0) + parse_number(parts[1])

    hermitian = all(value.imag == 0 for value in coeffs.values())
    return Spectrum(n, coeffs, hermitian=hermitian)


def format_spectrum(spec: Spectrum) -> str:
    lines = [f"n={spec.n}"]
    lines.extend(f"{key.label}  {format_number(value)}" for key, value in spec.items())
    return "\n".join(lines) + "\n"


def parse_dense(text: str) -> DenseOperator:
    lines = list(_content_lines(text))
    match = re.match(r"^dense\s+n\s*=\s*(\d+)$", lines[0], re.IGNORECASE) if lines else None
    if not match:
        raise InputFormatError("Dense operator file must start with 'dense n=<qubits>'")
    n = int(match.group(1))
    dim = 2**n

    rows = []
    for line in lines[1:]:
        pairs = _PAIR.findall(line)
        if len(pairs) != dim:
            raise InputFormatError(f"Row has {len(pairs)} entries, expected {dim}")
        try:
            rows.append([complex(float(re_), float(im)) for re_, im in pairs])
        except ValueError:
            raise InputFormatError(f"Cannot parse row {line!r}") from None
    if len(rows) != dim:
        raise InputFormatError(f"Dense operator has {len(rows)} rows, expected {dim}")
    return DenseOperator(np.array(rows, dtype=complex))


def format_dense(operator: DenseOperator) -> str:
    lines = [f"dense n={operator.n}"]
    for row in operator.matrix:
        lines.append(
            " ".join(f"({value.real:.17g}, {value.imag:.17g})" for value in row)
        )
    return "\n".join(lines) + "\n"


def parse_bitstring(text: str) -> str:
    bits = "".join(_content_lines(text)).replace(" ", "")
    if not bits or set(bits) - {"0", "1"}:
        raise InputFormatError("Truth table must be a non-empty string of 0 and 1")
    length = len(bits)
    if length < 2 or length & (length - 1):
        raise InputFormatError(f"Truth table length {length} is not a power of two >= 2")
    return bits


def read_input(path):
    """Return the file text and the SHA-256 digest of its bytes."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputFormatError(f"{path} is not UTF-8 text") from None
    return text, hashlib.sha256(data).hexdigest()
