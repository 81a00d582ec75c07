def use_or_default(obj, factory):
    """Return obj, or a fresh default from factory if obj is None."""
    if obj is None:
        return factory()
    return obj
