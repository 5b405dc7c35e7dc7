n = int(input())
r = 0
m = n
while m > 0:
    r = r * 10 + m % 10
    m = m // 10
print("Reverse: {}".format(r))
print("Sum: {}".format(n + r))
