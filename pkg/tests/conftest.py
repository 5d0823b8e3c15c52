from hypothesis import settings

settings.register_profile("zecap", max_examples=60, deadline=None)
settings.load_profile("zecap")
