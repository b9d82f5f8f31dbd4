import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from hypothesis import strategies as st  # noqa: E402

from fussforest.trees import LEAF, BinaryTree, leaf, node  # noqa: E402

# Random complete trees, small enough for exhaustive-style properties.
binary_trees = st.recursive(
    st.just(LEAF),
    lambda child: st.builds(BinaryTree, child, child),
    max_leaves=25,
)

colored_ternary_trees = st.recursive(
    st.integers(min_value=0, max_value=3).map(leaf),
    lambda child: st.builds(node, st.integers(min_value=0, max_value=3), child, child, child),
    max_leaves=20,
)
