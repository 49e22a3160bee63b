"""AutoPresentation to look up the bundled presentations by name"""

from collections import OrderedDict

from .presentation import Presentation, parse_presentation

PRESENTATION_MAPPING_NAMES = OrderedDict(
    [
        (
            "z2",
            "generators: x X y Y\ninverses: x=X y=Y\norder: x y X Y\nrelators: xyXY\n",
        ),
        (
            "z2_finite",
            "generators: x X y Y\ninverses: x=X y=Y\norder: x X y Y\nrelators: xyXY\n",
        ),
        (
            "s3",
            "generators: a A b B\ninverses: a=A b=B\norder: a A b B\nrelators: aa, bbb, abab\n",
        ),
        (
            "triangle_237",
            "generators: a A b B\ninverses: a=A b=B\norder: a A b B\nrelators: aa, bbb, ababababababab\n",
        ),
        (
            "trivial",
            "generators: a A\ninverses: a=A\norder: a A\nrelators: a\n",
        ),
        (
            "free2",
            "generators: a A b B\ninverses: a=A b=B\norder: a A b B\nrelators:\n",
        ),
    ]
)


class AutoPresentation:
    """AutoPresentation for the bundled fixture groups"""

    @classmethod
    def for_name(cls, name: str) -> Presentation:
        if name in PRESENTATION_MAPPING_NAMES:
            return parse_presentation(f"name: {name}\n" + PRESENTATION_MAPPING_NAMES[name])
        raise ValueError(
            f"Unrecognized presentation: {name}. Should be one of {', '.join(PRESENTATION_MAPPING_NAMES.keys())}"
        )

    def __call__(self, name: str) -> Presentation:
        return self.for_name(name)
