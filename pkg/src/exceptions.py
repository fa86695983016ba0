class UsageError(ValueError):
    pass


class DataError(ValueError):
    pass
