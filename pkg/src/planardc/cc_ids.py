"""64-bit cc-identifier allocation.

An identifier packs (instance id: 16 bits, payload: 48 bits).  Payloads
count up monotonically inside an instance, so an identifier retired by a
component split never reappears there; instance ids keep identifiers from
unrelated instances distinct and wrap at 65536 (identifiers are only ever
compared within one consuming structure).  Composite identifiers used by
the level query rule live in a disjoint namespace marked by bit 63.
"""

import itertools

from .errors import InvariantError

_PAYLOAD_BITS = 48
_INSTANCE_BITS = 16
COMPOSITE_TAG = 1 << 63
_REGION_SHIFT = 40

_instance_counter = itertools.count()


class IdAllocator:
    """Monotone fresh-identifier source for one algorithm instance."""

    __slots__ = ("instance_id", "_next")

    def __init__(self):
        self.instance_id = next(_instance_counter) % (1 << _INSTANCE_BITS)
        self._next = 0

    def fresh(self) -> int:
        payload = self._next
        self._next += 1
        if payload >= 1 << _PAYLOAD_BITS:
            raise InvariantError("cc-identifier payload space exhausted")
        return (self.instance_id << _PAYLOAD_BITS) | payload


def composite_id(region_id: int, local_alias: int) -> int:
    """Tagged (region, compacted local id) identifier, disjoint from globals."""
    if region_id >= 1 << (63 - _REGION_SHIFT) or local_alias >= 1 << _REGION_SHIFT:
        raise InvariantError("composite cc-identifier field overflow")
    return COMPOSITE_TAG | (region_id << _REGION_SHIFT) | local_alias
