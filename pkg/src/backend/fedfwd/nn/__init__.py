from .base_model import AffineLayer, BaseNetwork, LocalUpdate, ModelKind, count_parameters, init_affine

__all__ = [
    'AffineLayer',
    'BaseNetwork',
    'LocalUpdate',
    'ModelKind',
    'count_parameters',
    'init_affine',
]
