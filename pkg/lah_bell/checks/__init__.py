# Verification suite registry
