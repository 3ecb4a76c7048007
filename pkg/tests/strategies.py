from hypothesis import strategies as st

from hilbert_cores.partitions import Partition, from_principal_hooks


@st.composite
def partitions(draw, max_parts: int = 8, max_part: int = 10):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_parts))
    return Partition(sorted(parts, reverse=True))


@st.composite
def symmetric_partitions(draw, max_hook: int = 15):
    hooks = draw(st.sets(st.integers(0, max_hook // 2).map(lambda k: 2 * k + 1), max_size=4))
    return from_principal_hooks(sorted(hooks, reverse=True))
