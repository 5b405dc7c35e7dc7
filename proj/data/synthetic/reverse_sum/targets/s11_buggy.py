n = int(input())
r = int(str(n)[::-1])
print("Reverse: {}".format(r))
print("Sum: {}".format(n - r))
