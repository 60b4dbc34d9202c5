from hypothesis import settings

settings.register_profile("repo", derandomize=True, max_examples=100, deadline=None)
settings.load_profile("repo")
