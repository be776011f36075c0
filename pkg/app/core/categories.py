"""Example road-sign class table (suggested).

Eight sign classes: round and square speed limits plus stop and yield. Datasets
bring their own table; this one is used by the demo and as a starting point.
"""

ROAD_SIGN_CLASSES = [
    "round_30",
    "round_60",
    "round_90",
    "square_30",
    "square_60",
    "square_90",
    "stop",
    "yield",
]

# Demo sign colors, one per class above; distinct in every channel's coarse histogram bins
SIGN_COLORS: list[tuple[int, int, int]] = [
    (220, 20, 20),
    (20, 200, 20),
    (20, 20, 220),
    (230, 220, 20),
    (210, 20, 210),
    (20, 210, 210),
    (240, 130, 10),
    (120, 40, 170),
]
