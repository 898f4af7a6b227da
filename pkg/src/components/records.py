"""
Output records for the symmetric chains
"""
import json
from dataclasses import dataclass

from ..utils.helpers import format_chain_text

# Canonical key order of a JSON record
RECORD_KEYS = ("n", "id", "family", "params", "layer", "orientation", "chain")


@dataclass(frozen=True)
class OutputRecord:
    """
    One symmetric chain with its provenance

    params holds the family parameters i, j, k, u, w and, for C7-C9,
    the L(2, k) chain index t; layer is the peel layer of the ladder.
    """
    n: int
    id: int
    family: str
    params: dict
    layer: int
    orientation: str
    chain: tuple

    def to_dict(self):
        return {
            "n": self.n,
            "id": self.id,
            "family": self.family,
            "params": dict(self.params),
            "layer": self.layer,
            "orientation": self.orientation,
            "chain": [list(point) for point in self.chain],
        }

    def to_json(self):
        """One line of JSON with keys in canonical order"""
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self):
        return format_chain_text(self.chain)

    @classmethod
    def from_json(cls, line):
        """
        Decode a line written by to_json

        Raises:
            ValueError: if the line is not a record
        """
        data = json.loads(line)
        if not isinstance(data, dict) or tuple(data) != RECORD_KEYS:
            raise ValueError(f"Not an output record: {line!r}")
        return cls(
            n=data["n"],
            id=data["id"],
            family=data["family"],
            params=data["params"],
            layer=data["layer"],
            orientation=data["orientation"],
            chain=tuple(tuple(point) for point in data["chain"]),
        )


def record_params(key):
    """Parameter dict of a ladder key, t appended for C7-C9"""
    params = key.params.as_dict()
    if key.layer is not None:
        params["t"] = key.layer
    return params


def build_records(n, chains):
    """
    Output records for peeled chains, numbered in the order given

    Args:
        n: Box height
        chains: Chains whose provenance is a PeelTag

    Returns:
        List of OutputRecord
    """
    records = []
    for chain_id, chain in enumerate(chains):
        tag = chain.provenance
        records.append(OutputRecord(
            n=n,
            id=chain_id,
            family=tag.ladder.family,
            params=record_params(tag.ladder),
            layer=tag.layer,
            orientation=tag.orientation.value,
            chain=chain.points,
        ))
    return records
