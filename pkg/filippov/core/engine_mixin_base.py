from typing import TYPE_CHECKING, Any

MixinBase: Any
if TYPE_CHECKING:
    from .engine import Engine

    MixinBase = Engine
else:
    import abc

    MixinBase = abc.ABC
