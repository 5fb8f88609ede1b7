from reeder.dynkin import EXCEPTIONAL, MIN_RANK, DynkinType


def all_types(max_rank):
    for s, lo in MIN_RANK.items():
        for n in range(lo, max_rank + 1):
            yield DynkinType(s, n)
    for s, n in sorted(EXCEPTIONAL):
        if n <= max_rank:
            yield DynkinType(s, n)


def board(series, rank, black=()):
    from reeder.dynkin import build_diagram
    from reeder.puzzle import PuzzleInstance

    t = DynkinType(series, rank)
    return PuzzleInstance.from_diagram(build_diagram(t), [int(i in black) for i in range(1, rank + 1)])


def engine_partition(dec):
    """Classes of a decomposition as a set of frozensets of strings."""
    from reeder.puzzle import to_string

    return {frozenset(to_string(a, dec.n) for a in dec.members(c)) for c in range(len(dec))}
