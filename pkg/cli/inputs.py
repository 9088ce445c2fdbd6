"""Reading operator files and writing built operators."""

import hashlib
from pathlib import Path

from pauli_core.formats import (
    DENSE,
    SPECTRUM,
    TABLE,
    detect_kind,
    format_dense,
    parse_dense,
    parse_spectrum,
    read_input,
)
from pauli_core.fourier import inverse_fourier
from qbf_build.oracles import TruthTable, phase_oracle


class LoadedInput:
    """One input file: its kind, digest and the parsed object."""

    def __init__(self, path, kind, digest, value):
        self.path = str(path)
        self.kind = kind
        self.digest = digest
        self.value = value

    @property
    def operator(self):
        """The input as a DenseOperator; truth tables become phase oracles."""
        if self.kind == SPECTRUM:
            return inverse_fourier(self.value)
        if self.kind == TABLE:
            return phase_oracle(self.value)
        return self.value

    @property
    def table(self):
        return self.value if self.kind == TABLE else None


def load_input(path, kind=None) -> LoadedInput:
    text, digest = read_input(path)
    kind = kind or detect_kind(text)
    if kind == SPECTRUM:
        value = parse_spectrum(text)
    elif kind == DENSE:
        value = parse_dense(text)
    else:
        value = TruthTable.from_bitstring(text)
    return LoadedInput(path, kind, digest, value)


def combined_digest(inputs):
    """The single file digest, or the SHA-256 of all digests in argument order."""
    if not inputs:
        return None
    if len(inputs) == 1:
        return inputs[0].digest
    return hashlib.sha256("".join(item.digest for item in inputs).encode()).hexdigest()


def write_operator(path, operator):
    Path(path).write_text(format_dense(operator), encoding="utf-8")
